#include "permagic/pipeline.h"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "permagic/pauli.h"
#include "permagic/ray.h"
#include "permagic/serialize.h"

namespace permagic {

namespace {

std::string fixed(double x, int digits = 4) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
}

nlohmann::json vector_json(const CVector &v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &x : v) {
        out.push_back(x.str());
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<Construction> constructions_for(size_t d, const std::string &choice) {
    if (choice == "direct") {
        return {Construction::direct};
    }
    if (choice == "tensor") {
        if (is_prime(d)) {
            return {Construction::direct};
        }
        return {Construction::tensor};
    }
    if (choice == "both") {
        if (is_prime(d)) {
            return {Construction::direct};
        }
        return {Construction::direct, Construction::tensor};
    }
    if (choice == "half_angle") {
        return {Construction::half_angle};
    }
    throw std::invalid_argument("unknown construction '" + choice + "'");
}

Table2Report run_table2(const Fixtures &fixtures, const std::vector<size_t> &dims,
                        const std::string &construction_choice) {
    Table2Report report;
    std::map<std::pair<size_t, std::string>, bool> all_ok;
    std::map<std::string, bool> row_matched;
    for (const auto &entry : fixtures.table2) {
        if (std::find(dims.begin(), dims.end(), entry.d) == dims.end()) {
            continue;
        }
        std::string row_id = std::to_string(entry.d) + " " + entry.label;
        row_matched.emplace(row_id, false);
        for (Construction c : constructions_for(entry.d, construction_choice)) {
            bool row_ok = true;
            for (const auto &state : entry.states) {
                Table2Result r;
                r.d = entry.d;
                r.label = entry.label;
                r.state = state;
                r.group = entry.group;
                r.construction = construction_name(c);
                r.expected = entry.sum_text;
                try {
                    const PhasePointSet &pps = phase_points(entry.d, c);
                    WignerMatrix w;
                    if (!state.empty() && state[0] != '(' && state[0] != '[') {
                        w = wigner_of_density(reference_state(state).density, pps);
                    } else {
                        w = wigner_function(state_vector(state, entry.symbols), pps);
                    }
                    MagicMonotones m = monotones(w);
                    r.computed = m.negative_sum.str();
                    r.computed_approx = m.negative_sum.approx().real();
                    r.mana = m.mana;
                    r.match = m.negative_sum == entry.sum;
                } catch (const std::exception &e) {
                    r.error = e.what();
                }
                row_ok = row_ok && r.match;
                report.rows.push_back(std::move(r));
            }
            auto key = std::make_pair(entry.d, construction_name(c));
            auto it = all_ok.emplace(key, true).first;
            it->second = it->second && row_ok;
            if (row_ok) {
                row_matched[row_id] = true;
            }
        }
    }
    for (const auto &[key, ok] : all_ok) {
        auto &list = report.matching_constructions[key.first];
        if (ok) {
            list.push_back(key.second);
        }
    }
    for (const auto &[id, ok] : row_matched) {
        if (!ok) {
            report.unmatched.push_back(id);
        }
    }
    return report;
}

ContextSummary analyse_context(const OrthoGraph &g) {
    ContextSummary c;
    c.vertices = g.size();
    c.edges = g.edge_count();
    c.clique_profile = clique_profile(g);
    c.pentagons = find_pentagons(g);
    c.all_five_cycles = count_all_five_cycles(g);
    try {
        c.alpha = independence_number(g);
    } catch (const BudgetExceeded &) {
        c.alpha.reset();
    }
    for (const auto &p : c.pentagons) {
        c.witnesses.push_back(witness_check({p.begin(), p.end()}, g));
    }
    c.census = pentagon_census(g, c.pentagons);
    return c;
}

ClassifyResult run_classify(const GateGroup &g, const ClassifyOptions &options) {
    ClassifyResult r;
    r.report = classify_group(g, options);
    r.graph = build_graph(r.report);
    r.context = analyse_context(r.graph);
    return r;
}

CVector random_ray(size_t d, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int64_t> power(0, 2 * (int64_t)d - 1);
    while (true) {
        CVector v;
        bool nonzero = false;
        for (size_t k = 0; k < d; k++) {
            Cyclotomic x = Cyclotomic(coef(rng)) + Cyclotomic(coef(rng)) * Cyclotomic::root_of_unity(2 * d, power(rng));
            nonzero = nonzero || !x.is_zero();
            v.push_back(x);
        }
        if (nonzero) {
            return v;
        }
    }
}

PropsResult run_props(size_t d, Construction c, size_t trials, uint64_t seed) {
    PropsResult r;
    r.d = d;
    r.construction = construction_name(c);
    const PhasePointSet &pps = phase_points(d, c);
    r.properties = check_phase_points(pps);
    std::mt19937_64 rng(seed);
    for (size_t t = 0; t < trials; t++) {
        CVector v = random_ray(d, rng);
        CMatrix rho = projector(v);
        r.reconstruction_trials++;
        try {
            WignerMatrix w = wigner_of_density(rho, pps);
            if (!(reconstruct_density(w, pps) == rho)) {
                r.reconstruction_failures++;
            }
        } catch (const NonHermitianDensity &) {
            // Non-Hermitian operators give complex "Wigner" values; that is a failure, not an abort.
            r.reconstruction_failures++;
            r.nonreal_wigner++;
        }
    }
    return r;
}

nlohmann::json to_json(const Table2Report &r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &x : r.rows) {
        nlohmann::json j = {{"d", x.d},
                            {"label", x.label},
                            {"state", x.state},
                            {"group", x.group},
                            {"construction", x.construction},
                            {"expected", x.expected},
                            {"computed", x.computed},
                            {"computed_approx", x.computed_approx},
                            {"mana", x.mana},
                            {"match", x.match}};
        if (!x.error.empty()) {
            j["error"] = x.error;
        }
        rows.push_back(j);
    }
    nlohmann::json matching = nlohmann::json::object();
    for (const auto &[d, list] : r.matching_constructions) {
        matching[std::to_string(d)] = list;
    }
    return {{"rows", rows}, {"matching_constructions", matching}, {"unmatched", r.unmatched}};
}

nlohmann::json to_json(const EigenReport &r) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto &ray : r.rays) {
        rays.push_back({{"amplitudes", vector_json(ray.amplitudes)},
                        {"tag", tag_name(ray.tag)},
                        {"pattern", amplitude_pattern(ray.amplitudes)},
                        {"cliques", ray.provenance}});
    }
    nlohmann::json orders = nlohmann::json::object();
    for (const auto &[k, v] : r.signature.element_orders) {
        orders[std::to_string(k)] = v;
    }
    return {{"group", r.group_name},
            {"d", r.d},
            {"order", r.signature.order},
            {"element_orders", orders},
            {"cliques", r.cliques},
            {"rays", rays},
            {"counts",
             {{"total", r.rays.size()},
              {"stabilizer", r.stabilizer_count},
              {"magic", r.magic_count},
              {"unclassified", r.unclassified_count},
              {"restricted_away", r.restricted_away}}}};
}

nlohmann::json to_json(const ContextSummary &c, const OrthoGraph &g) {
    nlohmann::json profile = nlohmann::json::object();
    for (const auto &[k, v] : c.clique_profile) {
        profile[std::to_string(k)] = v;
    }
    nlohmann::json pentagons = nlohmann::json::array();
    for (size_t i = 0; i < c.pentagons.size(); i++) {
        const auto &w = c.witnesses[i];
        const auto &comp = c.census.pentagons[i];
        nlohmann::json verts = nlohmann::json::array();
        for (size_t v : c.pentagons[i]) {
            verts.push_back(vector_str(g.rays[v]));
        }
        pentagons.push_back({{"vertices", c.pentagons[i]},
                             {"rays", verts},
                             {"alpha", w.alpha},
                             {"witness_max", w.witness_max},
                             {"error_bound", w.error_bound},
                             {"contextual", w.contextual},
                             {"inconclusive", w.inconclusive},
                             {"stabilizer_vertices", comp.stabilizer},
                             {"magic_vertices", comp.magic},
                             {"magic_patterns", comp.magic_patterns}});
    }
    nlohmann::json hist = nlohmann::json::array();
    for (const auto &[k, v] : c.census.composition_histogram) {
        hist.push_back({{"stabilizer", k.first}, {"magic", k.second}, {"pentagons", v}});
    }
    nlohmann::json j = {{"vertices", c.vertices},
                        {"edges", c.edges},
                        {"clique_profile", profile},
                        {"pentagon_count", c.pentagons.size()},
                        {"all_five_cycles", c.all_five_cycles},
                        {"pentagons", pentagons},
                        {"census", {{"composition", hist}, {"magic_patterns", c.census.magic_patterns}}}};
    j["independence_number"] = c.alpha ? nlohmann::json(*c.alpha) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const ClassifyResult &r) {
    nlohmann::json j = to_json(r.report);
    j["context"] = to_json(r.context, r.graph);
    return j;
}

nlohmann::json to_json(const PropsResult &r) {
    const auto &p = r.properties;
    nlohmann::json j = {{"d", r.d},
                        {"construction", r.construction},
                        {"hermitian", p.hermitian},
                        {"unit_trace", p.unit_trace},
                        {"trace_orthogonal", p.trace_orthogonal},
                        {"sums_to_d_identity", p.sums_to_d_identity},
                        {"reconstruction",
                         {{"trials", r.reconstruction_trials},
                          {"failures", r.reconstruction_failures},
                          {"nonreal_wigner", r.nonreal_wigner}}}};
    j["striations"] = p.striations_checked ? nlohmann::json(p.striations) : nlohmann::json("not checked");
    return j;
}

nlohmann::json to_json(const MagicPairSearch &s) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto &g : s.groups) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto &p : g.group.generators) {
            gens.push_back(p.one_line());
        }
        nlohmann::json orders = nlohmann::json::object();
        for (const auto &[k, v] : g.signature.element_orders) {
            orders[std::to_string(k)] = v;
        }
        nlohmann::json j = {{"order", g.signature.order},
                            {"name", g.name},
                            {"abelian", g.signature.abelian},
                            {"element_orders", orders},
                            {"generators", gens},
                            {"element_sets", g.element_sets}};
        j["pair_orbits"] = g.pair_orbits >= 0 ? nlohmann::json(g.pair_orbits) : nlohmann::json(nullptr);
        groups.push_back(j);
    }
    return {{"d", s.degree},
            {"groups", groups},
            {"pairs_examined", s.pairs_examined},
            {"skipped_pairs", s.skipped_pairs},
            {"budget_exhausted", s.budget_exhausted}};
}

nlohmann::json to_json(const WignerMatrix &w, const MagicMonotones &m) {
    nlohmann::json exact = nlohmann::json::array();
    nlohmann::json approx = nlohmann::json::array();
    for (size_t q = 0; q < w.d; q++) {
        nlohmann::json er = nlohmann::json::array();
        nlohmann::json ar = nlohmann::json::array();
        for (size_t p = 0; p < w.d; p++) {
            er.push_back(w.at(q, p).str());
            ar.push_back(w.at(q, p).approx().real());
        }
        exact.push_back(er);
        approx.push_back(ar);
    }
    return {{"d", w.d},
            {"entries", exact},
            {"approx", approx},
            {"negative_sum", m.negative_sum.str()},
            {"negative_sum_json", cyclo_to_json(m.negative_sum)},
            {"sum_negativity", m.sum_negativity.approx().real()},
            {"mana", m.mana},
            {"nonnegative", m.nonnegative}};
}

std::string table2_csv(const Table2Report &r) {
    std::ostringstream out;
    out << "d,state,construction,expected,computed,approx,mana,group,match\n";
    for (const auto &x : r.rows) {
        out << x.d << ',' << csv_field(x.state) << ',' << x.construction << ',' << csv_field(x.expected) << ','
            << csv_field(x.error.empty() ? x.computed : "error: " + x.error) << ',' << fixed(x.computed_approx, 6)
            << ',' << fixed(x.mana, 6) << ',' << csv_field(x.group) << ',' << (x.match ? "match" : "MISMATCH")
            << '\n';
    }
    return out.str();
}

std::string rays_csv(const EigenReport &r) {
    std::ostringstream out;
    out << "index,tag,pattern,amplitudes\n";
    for (size_t i = 0; i < r.rays.size(); i++) {
        out << i << ',' << tag_name(r.rays[i].tag) << ',' << csv_field(amplitude_pattern(r.rays[i].amplitudes)) << ','
            << csv_field(vector_str(r.rays[i].amplitudes)) << '\n';
    }
    return out.str();
}

std::string table2_text(const Table2Report &r) {
    std::ostringstream out;
    for (const auto &x : r.rows) {
        out << "d=" << x.d << "  " << std::left << std::setw(24) << x.state << std::setw(8) << x.construction
            << "  sum " << std::setw(10) << fixed(x.computed_approx) << (x.match ? "  match   " : "  MISMATCH")
            << "  expected " << x.expected;
        if (!x.error.empty()) {
            out << "  error: " << x.error;
        }
        out << '\n';
    }
    out << "constructions matching every row:\n";
    for (const auto &[d, list] : r.matching_constructions) {
        out << "  d=" << d << ":";
        for (const auto &c : list) {
            out << ' ' << c;
        }
        if (list.empty()) {
            out << " none";
        }
        out << '\n';
    }
    return out.str();
}

std::string classify_text(const ClassifyResult &r) {
    std::ostringstream out;
    const auto &e = r.report;
    out << "group " << (e.group_name.empty() ? "?" : e.group_name) << " (order " << e.signature.order << ", d=" << e.d
        << ")\n";
    out << "cliques examined: " << e.cliques.size() << '\n';
    out << "rays: " << e.rays.size() << " (stabilizer " << e.stabilizer_count << ", magic " << e.magic_count;
    if (e.restricted_away > 0) {
        out << ", " << e.restricted_away << " magic rays outside {0,1,-1} dropped";
    }
    out << ")\n";
    for (const auto &ray : e.rays) {
        out << "  " << (ray.tag == Tag::stabilizer ? "S " : "M ") << vector_str(ray.amplitudes) << '\n';
    }
    const auto &c = r.context;
    out << "orthogonality graph: " << c.vertices << " vertices, " << c.edges << " edges\n";
    out << "maximal cliques:";
    for (const auto &[k, v] : c.clique_profile) {
        out << ' ' << v << "x" << k;
    }
    out << '\n';
    out << "induced pentagons: " << c.pentagons.size() << " (5-cycles with chords allowed: " << c.all_five_cycles
        << ")\n";
    out << "independence number: " << (c.alpha ? std::to_string(*c.alpha) : std::string("budget exceeded")) << '\n';
    size_t contextual = 0;
    for (const auto &w : c.witnesses) {
        contextual += w.contextual;
    }
    out << "contextual pentagons: " << contextual << " of " << c.pentagons.size() << '\n';
    for (const auto &[k, v] : c.census.composition_histogram) {
        out << "  " << v << " pentagons with " << k.first << " stabilizer + " << k.second << " magic vertices\n";
    }
    for (const auto &[k, v] : c.census.magic_patterns) {
        out << "  magic vertex pattern " << k << ": " << v << '\n';
    }
    return out.str();
}

std::string search_text(const MagicPairSearch &s) {
    std::ostringstream out;
    out << "d=" << s.degree << ": " << s.groups.size() << " conjugacy classes of magic-pair groups, "
        << s.pairs_examined << " pairs examined";
    if (s.skipped_pairs > 0) {
        out << ", " << s.skipped_pairs << " pairs over the order cap";
    }
    if (s.budget_exhausted) {
        out << ", budget exhausted (partial result)";
    }
    out << '\n';
    for (const auto &g : s.groups) {
        out << "  order " << std::setw(5) << g.signature.order << "  " << std::setw(10)
            << (g.name.empty() ? "-" : g.name) << "  <" << g.group.generators[0].one_line() << ", "
            << g.group.generators[1].one_line() << ">";
        if (g.pair_orbits >= 0) {
            out << "  pair orbits " << g.pair_orbits;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace permagic
