// permagic: command-line front end for the permutation-gate magic state pipeline.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "permagic/pauli.h"
#include "permagic/pipeline.h"
#include "permagic/ray.h"

using namespace permagic;

namespace {

enum ExitCode { OK = 0, CONFIG_ERROR = 2, COMPUTATION_ERROR = 3, FIXTURE_MISMATCH = 4 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<size_t> dims;
    std::string mode;
    std::string generators;
    std::string notation = "one_line";
    std::string group;
    size_t order_cap = 5000;
    std::string construction = "both";
    bool paper_restriction = false;
    bool maximum_cliques = false;
    size_t min_clique = 1;
    bool pm_one = false;
    std::string stabilizers = "tensor";
    std::string state;
    std::string out;
    std::string format = "text";
    double budget_seconds = 0;
    std::string fixtures;
    size_t trials = 50;
    uint64_t seed = 1;
};

void emit(const RunConfig &cfg, const std::string &text) {
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) {
        throw ConfigError("cannot write " + cfg.out);
    }
    f << text;
    if (!text.empty() && text.back() != '\n') {
        f << '\n';
    }
}

void require_format(const RunConfig &cfg, std::initializer_list<const char *> allowed) {
    for (const char *f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    std::string list;
    for (const char *f : allowed) {
        list += std::string(list.empty() ? "" : ", ") + f;
    }
    throw ConfigError("mode " + cfg.mode + " supports formats: " + list);
}

std::vector<size_t> dims_or(const RunConfig &cfg, std::vector<size_t> fallback) {
    return cfg.dims.empty() ? fallback : cfg.dims;
}

GateGroup group_from_config(const RunConfig &cfg) {
    if (!cfg.group.empty()) {
        try {
            GateGroup g = named_group(cfg.group);
            if (!cfg.dims.empty() && cfg.dims[0] != g.degree()) {
                throw ConfigError("group " + cfg.group + " acts on " + std::to_string(g.degree()) + " points, not " +
                                  std::to_string(cfg.dims[0]));
            }
            return g;
        } catch (const std::out_of_range &e) {
            throw ConfigError(e.what());
        }
    }
    PermNotation notation = cfg.notation == "cycles" ? PermNotation::cycles : PermNotation::one_line;
    size_t degree = cfg.dims.empty() ? 0 : cfg.dims[0];
    std::vector<Permutation> gens;
    try {
        gens = parse_generators(cfg.generators, notation, degree);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("bad generators: ") + e.what());
    }
    if (gens.empty()) {
        throw ConfigError("no generators given");
    }
    if (degree != 0 && gens[0].degree() != degree) {
        throw ConfigError("generators act on " + std::to_string(gens[0].degree()) + " points, --dim is " +
                          std::to_string(degree));
    }
    return close_group(gens, cfg.order_cap);
}

ClassifyOptions classify_options(const RunConfig &cfg) {
    ClassifyOptions o;
    o.min_clique_size = cfg.min_clique;
    o.maximum_only = cfg.maximum_cliques;
    o.plus_minus_one_only = cfg.pm_one;
    o.paper_restriction = cfg.paper_restriction;
    o.stabilizers = cfg.stabilizers == "single_qudit" ? StabilizerConstruction::single_qudit : StabilizerConstruction::tensor;
    return o;
}

std::string reference_report(const RunConfig &cfg) {
    const PhasePointSet &pps = phase_points(2, Construction::direct);
    nlohmann::json all = nlohmann::json::array();
    std::ostringstream text;
    text << "d=2 has no magic permutation pairs; reference states only\n";
    for (const auto &name : reference_state_names()) {
        ReferenceState s = reference_state(name);
        if (s.d != 2) {
            continue;
        }
        WignerMatrix w = wigner_of_density(s.density, pps);
        MagicMonotones m = monotones(w);
        nlohmann::json j = to_json(w, m);
        j["state"] = name;
        j["stabilizer"] = s.exact ? nlohmann::json(is_stabilizer(canonical_ray(*s.exact))) : nlohmann::json(false);
        all.push_back(j);
        text << name << ": W = " << w.str() << "  negative sum " << m.negative_sum << '\n';
    }
    return cfg.format == "json" ? all.dump(1) : text.str();
}

int run_search(const RunConfig &cfg) {
    require_format(cfg, {"text", "json"});
    nlohmann::json all = nlohmann::json::array();
    std::string text;
    for (size_t d : dims_or(cfg, {4, 5, 6, 7})) {
        if (d < 2 || d > MAX_DEGREE) {
            throw ConfigError("search needs 2 <= d <= 9");
        }
        SearchOptions o;
        o.order_cap = cfg.order_cap;
        o.budget_seconds = cfg.budget_seconds;
        o.progress = [](const std::string &msg) { std::cerr << msg << '\n'; };
        MagicPairSearch s = enumerate_magic_pairs(d, o);
        all.push_back(to_json(s));
        text += search_text(s);
    }
    emit(cfg, cfg.format == "json" ? all.dump(1) : text);
    return OK;
}

int run_classify_mode(const RunConfig &cfg, bool context_only) {
    require_format(cfg, {"text", "json", "csv", "dot"});
    if (cfg.group.empty() && cfg.generators.empty()) {
        if (cfg.dims.size() == 1 && cfg.dims[0] == 2) {
            require_format(cfg, {"text", "json"});
            emit(cfg, reference_report(cfg));
            return OK;
        }
        throw ConfigError("mode " + cfg.mode + " needs --group or --generators (or --dim 2 for reference states)");
    }
    GateGroup g = group_from_config(cfg);
    ClassifyResult r = run_classify(g, classify_options(cfg));
    if (cfg.format == "dot") {
        emit(cfg, to_dot(r.graph, "ortho_d" + std::to_string(g.degree())));
    } else if (cfg.format == "csv") {
        emit(cfg, rays_csv(r.report));
    } else if (cfg.format == "json") {
        emit(cfg, (context_only ? to_json(r.context, r.graph) : to_json(r)).dump(1));
    } else {
        emit(cfg, classify_text(r));
    }
    return OK;
}

int run_wigner(const RunConfig &cfg) {
    require_format(cfg, {"text", "json"});
    if (cfg.state.empty()) {
        throw ConfigError("mode wigner needs --state");
    }
    CVector ray;
    std::optional<CMatrix> rho;
    size_t d = 0;
    try {
        if (cfg.state[0] == '(' || cfg.state[0] == '[') {
            ray = parse_vector(cfg.state);
            d = ray.size();
        } else {
            ReferenceState s = reference_state(cfg.state);
            rho = s.density;
            d = s.d;
        }
    } catch (const std::exception &e) {
        throw ConfigError(std::string("bad state: ") + e.what());
    }
    if (!cfg.dims.empty() && cfg.dims[0] != d) {
        throw ConfigError("state has dimension " + std::to_string(d));
    }
    nlohmann::json all = nlohmann::json::array();
    std::ostringstream text;
    for (Construction c : constructions_for(d, cfg.construction)) {
        const PhasePointSet &pps = phase_points(d, c);
        WignerMatrix w = rho ? wigner_of_density(*rho, pps) : wigner_function(ray, pps);
        MagicMonotones m = monotones(w);
        nlohmann::json j = to_json(w, m);
        j["construction"] = construction_name(c);
        all.push_back(j);
        text << "construction " << construction_name(c) << '\n'
             << w.pretty() << "sum of negative entries " << m.negative_sum << " ~ " << m.negative_sum.approx().real()
             << ", mana " << m.mana << "\n";
    }
    emit(cfg, cfg.format == "json" ? all.dump(1) : text.str());
    return OK;
}

int run_table2_mode(const RunConfig &cfg) {
    require_format(cfg, {"text", "json", "csv"});
    Fixtures f;
    try {
        f = load_fixtures(cfg.fixtures.empty() ? default_fixtures_path() : cfg.fixtures);
    } catch (const FixtureError &e) {
        throw ConfigError(e.what());
    }
    Table2Report r = run_table2(f, dims_or(cfg, {2, 3, 4, 5, 6, 7, 8, 9}), cfg.construction);
    if (cfg.format == "json") {
        emit(cfg, to_json(r).dump(1));
    } else if (cfg.format == "csv") {
        emit(cfg, table2_csv(r));
    } else {
        emit(cfg, table2_text(r));
    }
    if (!r.all_matched()) {
        for (const auto &u : r.unmatched) {
            std::cerr << "no construction matches row d=" << u << '\n';
        }
        return FIXTURE_MISMATCH;
    }
    return OK;
}

int run_props_mode(const RunConfig &cfg) {
    require_format(cfg, {"text", "json"});
    nlohmann::json all = nlohmann::json::array();
    std::ostringstream text;
    for (size_t d : dims_or(cfg, {2, 3, 5, 7})) {
        for (Construction c : constructions_for(d, cfg.construction)) {
            PropsResult r = run_props(d, c, cfg.trials, cfg.seed);
            all.push_back(to_json(r));
            const auto &p = r.properties;
            auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
            text << "d=" << d << " " << r.construction << ": hermitian " << pf(p.hermitian) << ", unit trace "
                 << pf(p.unit_trace) << ", trace orthogonal " << pf(p.trace_orthogonal) << ", striations "
                 << (p.striations_checked ? pf(p.striations) : "n/a") << ", sum = dI " << pf(p.sums_to_d_identity)
                 << ", reconstruction " << (r.reconstruction_trials - r.reconstruction_failures) << "/"
                 << r.reconstruction_trials << '\n';
        }
    }
    emit(cfg, cfg.format == "json" ? all.dump(1) : text.str());
    return OK;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Magic states, Wigner functions and contextuality from permutation gates"};
    RunConfig cfg;
    app.add_option("--mode", cfg.mode, "search, classify, context, wigner, table2 or props")
        ->required()
        ->check(CLI::IsMember({"search", "classify", "context", "wigner", "table2", "props"}));
    app.add_option("--dim", cfg.dims, "Dimension(s), 2..9")->check(CLI::Range(2, 9));
    app.add_option("--generators", cfg.generators, "Generators separated by ';', e.g. \"(1,3,4,2);(3,1,2,4)\"");
    app.add_option("--notation", cfg.notation, "Generator notation")
        ->check(CLI::IsMember({"one_line", "cycles"}));
    app.add_option("--group", cfg.group, "Named group (" + [] {
        std::string s;
        for (const auto &n : named_group_names()) {
            s += (s.empty() ? "" : ", ") + n;
        }
        return s;
    }() + ")");
    app.add_option("--order-cap", cfg.order_cap, "Largest group order to close");
    app.add_option("--construction", cfg.construction, "Phase-point construction")
        ->check(CLI::IsMember({"direct", "tensor", "both", "half_angle"}));
    app.add_flag("--paper-restriction", cfg.paper_restriction,
                 "For d >= 5 keep only magic rays with amplitudes in {0, 1, -1}");
    app.add_flag("--maximum-cliques", cfg.maximum_cliques, "Use only the largest commuting cliques");
    app.add_option("--min-clique", cfg.min_clique, "Smallest commuting clique used")->check(CLI::PositiveNumber);
    app.add_flag("--pm-one", cfg.pm_one, "Keep only joint eigenspaces with eigenvalues +1/-1");
    app.add_option("--stabilizers", cfg.stabilizers, "Stabilizer construction for composite d")
        ->check(CLI::IsMember({"tensor", "single_qudit"}));
    app.add_option("--state", cfg.state, "State for wigner mode: a vector like (0,1,-1) or a name (H, T, ...)");
    app.add_option("--out", cfg.out, "Output file (default stdout)");
    app.add_option("--format", cfg.format, "text, json, csv or dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("--budget-seconds", cfg.budget_seconds, "Wall-clock budget for searches (0 = none)");
    app.add_option("--fixtures", cfg.fixtures, "Reference values file");
    app.add_option("--trials", cfg.trials, "Random rays per dimension for the reconstruction check");
    app.add_option("--seed", cfg.seed, "Seed for random rays");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? OK : CONFIG_ERROR;
    }
    try {
        if (cfg.mode == "search") {
            return run_search(cfg);
        }
        if (cfg.mode == "classify" || cfg.mode == "context") {
            return run_classify_mode(cfg, cfg.mode == "context");
        }
        if (cfg.mode == "wigner") {
            return run_wigner(cfg);
        }
        if (cfg.mode == "table2") {
            return run_table2_mode(cfg);
        }
        return run_props_mode(cfg);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return CONFIG_ERROR;
    } catch (const OrderCapExceeded &e) {
        std::cerr << "group order exceeds --order-cap: " << e.what() << '\n';
        return COMPUTATION_ERROR;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return COMPUTATION_ERROR;
    }
}
