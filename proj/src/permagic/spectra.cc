#include "permagic/spectra.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "permagic/ray.h"

namespace permagic {

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::stabilizer:
            return "stabilizer";
        case Tag::magic:
            return "magic";
        case Tag::unclassified:
            return "unclassified";
    }
    return "?";
}

std::vector<CVector> joint_eigenrays(const std::vector<Permutation> &clique, bool plus_minus_one_only) {
    if (clique.empty()) {
        throw std::invalid_argument("joint_eigenrays needs at least one gate");
    }
    std::set<Permutation> distinct(clique.begin(), clique.end());
    if (distinct.size() != clique.size()) {
        throw std::invalid_argument("clique repeats a gate");
    }
    for (const auto &g : clique) {
        if (g.is_identity()) {
            throw std::invalid_argument("clique contains the identity");
        }
        if (g.degree() != clique[0].degree()) {
            throw DegreeMismatch("clique gates have different degrees");
        }
    }
    for (size_t a = 0; a < clique.size(); a++) {
        for (size_t b = a + 1; b < clique.size(); b++) {
            if (clique[a] * clique[b] != clique[b] * clique[a]) {
                throw NonCommutingClique("gates " + clique[a].cycles() + " and " + clique[b].cycles() +
                                         " do not commute");
            }
        }
    }
    std::vector<CMatrix> mats;
    std::vector<CVector> candidates;
    for (const auto &g : clique) {
        mats.push_back(gate_matrix(g));
        size_t k = g.order();
        CVector c;
        for (size_t t = 0; t < k; t++) {
            c.push_back(Cyclotomic::root_of_unity(k, t));
        }
        candidates.push_back(std::move(c));
    }
    std::vector<CVector> out;
    const Cyclotomic one(1), minus_one(-1);
    for (const auto &space : joint_eigenspaces(mats, candidates)) {
        if (plus_minus_one_only) {
            bool ok = std::all_of(space.eigenvalues.begin(), space.eigenvalues.end(),
                                  [&](const Cyclotomic &l) { return l == one || l == minus_one; });
            if (!ok) {
                continue;
            }
        }
        for (const auto &row : space.basis) {
            out.push_back(canonical_ray(row));
        }
    }
    return out;
}

std::vector<CVector> EigenReport::amplitudes() const {
    std::vector<CVector> out;
    for (const auto &r : rays) {
        out.push_back(r.amplitudes);
    }
    return out;
}

std::vector<Tag> EigenReport::tags() const {
    std::vector<Tag> out;
    for (const auto &r : rays) {
        out.push_back(r.tag);
    }
    return out;
}

EigenReport classify_group(const GateGroup &g, const ClassifyOptions &options) {
    EigenReport report;
    report.d = g.degree();
    report.signature = group_signature(g);
    report.group_name = signature_name(report.signature);
    std::vector<std::vector<size_t>> cliques =
        commuting_cliques(g, std::max<size_t>(1, options.min_clique_size), options.maximum_only);
    if (options.exact_clique_size != 0) {
        std::erase_if(cliques, [&](const auto &c) { return c.size() != options.exact_clique_size; });
    }
    report.cliques = cliques;
    std::map<std::string, Ray> found;
    for (size_t ci = 0; ci < cliques.size(); ci++) {
        std::vector<Permutation> gates;
        for (size_t idx : cliques[ci]) {
            gates.push_back(g.elements[idx]);
        }
        for (auto &amps : joint_eigenrays(gates, options.plus_minus_one_only)) {
            std::string key = vector_str(amps);
            auto it = found.find(key);
            if (it == found.end()) {
                Ray r;
                r.amplitudes = std::move(amps);
                r.key = key;
                it = found.emplace(key, std::move(r)).first;
            }
            if (it->second.provenance.empty() || it->second.provenance.back() != ci) {
                it->second.provenance.push_back(ci);
            }
        }
    }
    auto stabilizers = enumerate_stabilizer_rays(report.d, options.stabilizers);
    for (auto &[key, r] : found) {
        r.tag = stabilizers->keys.count(key) ? Tag::stabilizer : Tag::magic;
        if (options.paper_restriction && report.d >= 5 && r.tag == Tag::magic && !has_unit_entries(r.amplitudes)) {
            report.restricted_away++;
            continue;
        }
        switch (r.tag) {
            case Tag::stabilizer:
                report.stabilizer_count++;
                break;
            case Tag::magic:
                report.magic_count++;
                break;
            case Tag::unclassified:
                report.unclassified_count++;
                break;
        }
        report.rays.push_back(std::move(r));
    }
    return report;
}

namespace {

std::vector<std::complex<double>> normalized(const CVector &v) {
    std::vector<std::complex<double>> out;
    double n = 0;
    for (const auto &x : v) {
        out.push_back(x.approx());
        n += std::norm(out.back());
    }
    for (auto &x : out) {
        x /= std::sqrt(n);
    }
    return out;
}

ReferenceState from_amplitudes(const std::string &name, CVector amps) {
    ReferenceState s;
    s.name = name;
    s.d = amps.size();
    s.density = outer(amps, amps).scaled(inner(amps, amps).inverse());
    s.numeric = normalized(amps);
    s.exact = std::move(amps);
    return s;
}

}  // namespace

std::vector<std::string> reference_state_names() {
    return {"zero", "one", "plus", "minus", "plus_i", "minus_i", "H", "T", "norrell", "strange"};
}

ReferenceState reference_state(const std::string &name) {
    const Cyclotomic i = Cyclotomic::i();
    if (name == "zero") {
        return from_amplitudes(name, {1, 0});
    }
    if (name == "one") {
        return from_amplitudes(name, {0, 1});
    }
    if (name == "plus") {
        return from_amplitudes(name, {1, 1});
    }
    if (name == "minus") {
        return from_amplitudes(name, {1, -1});
    }
    if (name == "plus_i") {
        return from_amplitudes(name, {1, i});
    }
    if (name == "minus_i") {
        return from_amplitudes(name, {1, -i});
    }
    if (name == "H") {
        return from_amplitudes(name, {Cyclotomic::cos_pi(mpq_class(1, 8)), Cyclotomic::sin_pi(mpq_class(1, 8))});
    }
    if (name == "norrell") {
        return from_amplitudes(name, {0, 1, 1});
    }
    if (name == "strange") {
        return from_amplitudes(name, {0, 1, -1});
    }
    if (name == "T") {
        // cos(beta)|0> + exp(i pi / 4) sin(beta)|1> with cos(2 beta) = 1/sqrt(3). The amplitudes
        // are not cyclotomic but the density matrix is: cos^2 = (1 + 1/sqrt3)/2,
        // sin^2 = (1 - 1/sqrt3)/2, cos sin = sqrt(6)/6.
        ReferenceState s;
        s.name = name;
        s.d = 2;
        Cyclotomic inv_sqrt3 = Cyclotomic::sqrt(3).inverse();
        Cyclotomic half(mpq_class(1, 2));
        Cyclotomic off = Cyclotomic::sqrt(6) * Cyclotomic(mpq_class(1, 6));
        s.density = CMatrix(2, 2);
        s.density(0, 0) = (Cyclotomic(1) + inv_sqrt3) * half;
        s.density(1, 1) = (Cyclotomic(1) - inv_sqrt3) * half;
        s.density(0, 1) = Cyclotomic::root_of_unity(8, -1) * off;
        s.density(1, 0) = Cyclotomic::root_of_unity(8, 1) * off;
        double beta = std::acos(1 / std::sqrt(3.0)) / 2;
        s.numeric = {std::cos(beta), std::polar(std::sin(beta), M_PI / 4)};
        return s;
    }
    throw std::out_of_range("unknown reference state '" + name + "'");
}

}  // namespace permagic
