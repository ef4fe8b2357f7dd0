#include <set>

#include <gtest/gtest.h>

#include "permagic/pauli.h"
#include "permagic/ray.h"
#include "permagic/spectra.h"
#include "permagic/wigner.h"

using namespace permagic;

namespace {

Permutation one_line(const std::string &s) {
    return parse_permutation(s, PermNotation::one_line);
}

std::set<std::string> keys_of(const std::vector<CVector> &rays) {
    std::set<std::string> out;
    for (const auto &r : rays) {
        out.insert(ray_key(r));
    }
    return out;
}

bool is_eigenvector(const CMatrix &m, const CVector &v) {
    CVector w = m * v;
    size_t k = 0;
    while (v[k].is_zero()) {
        k++;
    }
    Cyclotomic l = w[k] / v[k];
    for (size_t i = 0; i < v.size(); i++) {
        if (w[i] != l * v[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(Spectra, ShiftCliqueGivesFourierRays) {
    Permutation x = one_line("(2,3,1)");
    auto rays = joint_eigenrays({x, x * x});
    Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    EXPECT_EQ(keys_of(rays), keys_of({{1, 1, 1}, {1, w, w * w}, {1, w * w, w}}));
}

TEST(Spectra, InvalidCliques) {
    Permutation x = one_line("(2,3,1)");
    EXPECT_THROW(joint_eigenrays({}), std::invalid_argument);
    EXPECT_THROW(joint_eigenrays({x, Permutation::identity(3)}), std::invalid_argument);
    EXPECT_THROW(joint_eigenrays({x, x}), std::invalid_argument);
    EXPECT_THROW(joint_eigenrays({x, one_line("(1,3,2)")}), NonCommutingClique);
}

TEST(Spectra, PlusMinusOneFilter) {
    Permutation t = one_line("(1,3,2)");
    auto all = joint_eigenrays({t});
    auto pm = joint_eigenrays({t}, true);
    EXPECT_EQ(all.size(), 3u);  // eigenvalue 1 has a 2-dimensional space: two basis rays
    EXPECT_EQ(pm.size(), 3u);
    Permutation x = one_line("(2,3,1)");
    EXPECT_EQ(joint_eigenrays({x, x * x}, true).size(), 1u);
}

TEST(Spectra, QutritGroup) {
    EigenReport r = classify_group(named_group("S3"), {});
    EXPECT_EQ(r.rays.size(), 12u);
    EXPECT_EQ(r.stabilizer_count, 6u);
    EXPECT_EQ(r.magic_count, 6u);
    auto keys = keys_of(r.amplitudes());
    EXPECT_TRUE(keys.count(ray_key({0, 1, 1})));
    EXPECT_TRUE(keys.count(ray_key({0, 1, -1})));
    EXPECT_EQ(r.group_name, "S3");
}

TEST(Spectra, TwoQubitGroup) {
    GateGroup g = close_group({one_line("(1,3,4,2)"), one_line("(3,1,2,4)")}, 100);
    ClassifyOptions o;
    EXPECT_EQ(classify_group(g, o).rays.size(), 20u);
    o.min_clique_size = 2;
    EXPECT_EQ(classify_group(g, o).rays.size(), 20u);
    o.min_clique_size = 1;
    o.exact_clique_size = 3;
    EXPECT_EQ(classify_group(g, o).rays.size(), 4u);
    // The magic ray with entries (0, 1, -w, w - 1), w = exp(i pi / 3).
    Cyclotomic w = Cyclotomic::root_of_unity(6, 1);
    EXPECT_TRUE(keys_of(classify_group(g, {}).amplitudes()).count(ray_key({0, 1, -w, w - Cyclotomic(1)})));
}

TEST(Spectra, FiveDitGroups) {
    EigenReport f = classify_group(named_group("F20"), {});
    EXPECT_EQ(f.rays.size(), 30u);
    EXPECT_EQ(f.magic_count, 20u);
    ClassifyOptions o;
    o.maximum_only = true;
    EigenReport s = classify_group(named_group("S5"), o);
    EXPECT_EQ(s.cliques.size(), 10u);
    EXPECT_EQ(s.rays.size(), 50u);
}

TEST(Spectra, RestrictionToUnitEntries) {
    ClassifyOptions o;
    EigenReport all = classify_group(named_group("F20"), o);
    o.paper_restriction = true;
    EigenReport restricted = classify_group(named_group("F20"), o);
    EXPECT_EQ(restricted.rays.size() + restricted.restricted_away, all.rays.size());
    for (const auto &r : restricted.rays) {
        if (r.tag == Tag::magic) {
            EXPECT_TRUE(has_unit_entries(r.amplitudes));
        }
    }
    EXPECT_GT(restricted.restricted_away, 0u);
}

TEST(Spectra, RaysAreEigenvectorsOfTheirCliques) {
    for (const char *name : {"S3", "A4", "F20"}) {
        GateGroup g = named_group(name);
        EigenReport r = classify_group(g, {});
        size_t total = r.stabilizer_count + r.magic_count + r.unclassified_count;
        EXPECT_EQ(total, r.rays.size());
        std::set<std::string> keys;
        for (const auto &ray : r.rays) {
            EXPECT_TRUE(keys.insert(ray.key).second);
            EXPECT_EQ(ray.key, ray_key(ray.amplitudes));
            ASSERT_FALSE(ray.provenance.empty());
            for (size_t ci : ray.provenance) {
                for (size_t e : r.cliques[ci]) {
                    EXPECT_TRUE(is_eigenvector(gate_matrix(g.elements[e]), ray.amplitudes));
                }
            }
        }
    }
}

TEST(Spectra, TagsAgreeWithStabilizerTestAndWigner) {
    for (const char *name : {"S3", "F20"}) {
        EigenReport r = classify_group(named_group(name), {});
        const PhasePointSet &pps = phase_points(r.d, Construction::direct);
        for (const auto &ray : r.rays) {
            EXPECT_EQ(ray.tag == Tag::stabilizer, is_stabilizer(ray.amplitudes));
            bool negative = !monotones(wigner_function(ray.amplitudes, pps)).nonnegative;
            EXPECT_EQ(ray.tag == Tag::magic, negative) << vector_str(ray.amplitudes);
        }
    }
}

TEST(Spectra, ReferenceStates) {
    ReferenceState h = reference_state("H");
    ASSERT_TRUE(h.exact.has_value());
    Cyclotomic r2 = Cyclotomic::sqrt(2).inverse();
    CMatrix had = CMatrix::from_rows({{r2, r2}, {r2, -r2}});
    EXPECT_EQ(had * *h.exact, *h.exact);

    ReferenceState s = reference_state("strange");
    EXPECT_EQ(*s.exact, (CVector{0, 1, -1}));
    EXPECT_NEAR(std::abs(s.numeric[1]), std::sqrt(0.5), 1e-15);
    EXPECT_EQ(*reference_state("zero").exact, (CVector{1, 0}));
    EXPECT_THROW(reference_state("nope"), std::out_of_range);

    ReferenceState t = reference_state("T");
    EXPECT_FALSE(t.exact.has_value());
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            std::complex<double> n = t.numeric[i] * std::conj(t.numeric[j]);
            EXPECT_LT(std::abs(n - t.density(i, j).approx()), 1e-12);
        }
    }
    EXPECT_EQ(t.density.trace(), Cyclotomic(1));
    EXPECT_TRUE(t.density.is_hermitian());
    // Bloch vector (1, 1, 1)/sqrt(3): rho_01 = (x - i y) / 2, rho_00 - rho_11 = z.
    std::complex<double> r01 = t.numeric[0] * std::conj(t.numeric[1]);
    double inv = 1 / std::sqrt(3.0);
    EXPECT_NEAR(2 * r01.real(), inv, 1e-12);
    EXPECT_NEAR(-2 * r01.imag(), inv, 1e-12);
    EXPECT_NEAR(std::norm(t.numeric[0]) - std::norm(t.numeric[1]), inv, 1e-12);
}
