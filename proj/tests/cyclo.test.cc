#include <cmath>
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "permagic/cyclo.h"
#include "permagic/serialize.h"

using namespace permagic;

namespace {

using cld = std::complex<long double>;

// Independent embedding: evaluate sum c_k exp(2 pi i k / N) in long double.
cld oracle(const Cyclotomic &x) {
    const long double pi = std::acos(-1.0L);
    cld s = 0;
    for (size_t k = 0; k < x.coeffs().size(); k++) {
        long double c = x.coeffs()[k].get_d();
        s += c * std::polar(1.0L, 2 * pi * (long double)k / (long double)x.conductor());
    }
    return s;
}

Cyclotomic random_element(std::mt19937_64 &rng) {
    static const int64_t conductors[] = {1, 3, 4, 5, 7, 8, 9, 12};
    std::uniform_int_distribution<int> pick(0, 7), num(-5, 5), den(1, 4);
    int64_t n = conductors[pick(rng)];
    Cyclotomic x;
    for (int64_t k = 0; k < n; k++) {
        x += Cyclotomic(mpq_class(num(rng), den(rng))) * Cyclotomic::root_of_unity(n, k);
    }
    return x;
}

}  // namespace

TEST(Cyclo, RootOfUnityBasics) {
    EXPECT_EQ(Cyclotomic::root_of_unity(1, 0), Cyclotomic(1));
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    EXPECT_EQ(i * i, Cyclotomic(-1));
    EXPECT_EQ(i, Cyclotomic::i());
    EXPECT_EQ(Cyclotomic::root_of_unity(6, 7), Cyclotomic::root_of_unity(6, 1));
    EXPECT_EQ(Cyclotomic::root_of_unity(6, -1), Cyclotomic::root_of_unity(6, 5));
}

TEST(Cyclo, CubeRootsSumToMinusOne) {
    Cyclotomic s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
    EXPECT_EQ(s, Cyclotomic(-1));
    cld z = oracle(Cyclotomic::root_of_unity(3, 1)) + oracle(Cyclotomic::root_of_unity(3, 2));
    EXPECT_NEAR((double)z.real(), -1.0, 1e-15);
    EXPECT_NEAR((double)z.imag(), 0.0, 1e-15);
}

TEST(Cyclo, RootsRaisedToTheirOrderAreOne) {
    for (int64_t n = 1; n <= 18; n++) {
        for (int64_t k = 0; k < n; k++) {
            EXPECT_EQ(Cyclotomic::root_of_unity(n, k).pow(n), Cyclotomic(1)) << n << " " << k;
        }
    }
}

TEST(Cyclo, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; t++) {
        Cyclotomic a = random_element(rng), b = random_element(rng), c = random_element(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
        }
        cld lhs = oracle((a * b).canonical());
        cld rhs = oracle(a) * oracle(b);
        EXPECT_LT(std::abs(lhs - rhs), 1e-12L);
    }
}

TEST(Cyclo, ConjugationAndNorm) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; t++) {
        Cyclotomic a = random_element(rng);
        EXPECT_EQ(a.conj().conj(), a);
        Cyclotomic n = a * a.conj();
        EXPECT_TRUE(n.is_real());
        EXPECT_NE(real_sign(n), Sign::negative);
        EXPECT_EQ(real_sign(n) == Sign::zero, a.is_zero());
    }
}

TEST(Cyclo, CanonicalFormIsIndependentOfConductor) {
    Cyclotomic s2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
    EXPECT_EQ(s2, Cyclotomic::sqrt(2));
    Cyclotomic lifted = s2.lifted_to(120);
    EXPECT_EQ(lifted.conductor(), 120);
    EXPECT_EQ(lifted, s2);
    EXPECT_EQ(lifted.str(), s2.str());
    EXPECT_EQ(lifted.canonical().conductor(), 8);
    // A rational written through roots of unity reduces to conductor 1.
    Cyclotomic one = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 2) +
                     Cyclotomic::root_of_unity(5, 3) + Cyclotomic::root_of_unity(5, 4);
    EXPECT_TRUE(one.canonical().is_rational());
    EXPECT_EQ(one, Cyclotomic(-1));
}

TEST(Cyclo, SquareRootsSquareBack) {
    for (long n : {2, 3, 5, 6, 7, 12}) {
        Cyclotomic r = Cyclotomic::sqrt(n);
        EXPECT_EQ(r * r, Cyclotomic(n)) << n;
        EXPECT_NEAR((double)oracle(r.canonical()).real(), std::sqrt((double)n), 1e-12);
    }
}

TEST(Cyclo, MixedConductors) {
    Cyclotomic x = Cyclotomic::sqrt(3) * Cyclotomic::root_of_unity(7, 1);
    EXPECT_EQ(x.canonical().conductor(), 84);
    cld expect = std::sqrt(3.0L) * std::polar(1.0L, 2 * std::acos(-1.0L) / 7);
    EXPECT_LT(std::abs(oracle(x.canonical()) - expect), 1e-15L);
}

TEST(Cyclo, TrigValues) {
    EXPECT_EQ(Cyclotomic::cos_pi(mpq_class(1, 3)), Cyclotomic(mpq_class(1, 2)));
    EXPECT_EQ(Cyclotomic::sin_pi(mpq_class(1, 6)), Cyclotomic(mpq_class(1, 2)));
    Cyclotomic c = Cyclotomic::cos_pi(mpq_class(1, 8));
    EXPECT_NEAR((double)oracle(c.canonical()).real(), std::cos(M_PI / 8), 1e-15);
    Cyclotomic a = Cyclotomic::cos_pi(mpq_class(2, 7)) * Cyclotomic(2);
    EXPECT_NEAR((double)oracle(a.canonical()).real(), 2 * std::cos(2 * M_PI / 7), 1e-15);
}

TEST(Cyclo, RealSignExamples) {
    EXPECT_EQ(real_sign(Cyclotomic()), Sign::zero);
    Cyclotomic sqrt2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, -1);
    EXPECT_EQ(real_sign(Cyclotomic(1) - sqrt2), Sign::negative);
    Cyclotomic x = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4) + Cyclotomic(1);
    EXPECT_EQ(real_sign(x), Sign::positive);
    // 2 cos(2 pi / 5) + 1 = (sqrt 5 + 1) / 2.
    EXPECT_EQ(x, (Cyclotomic::sqrt(5) + Cyclotomic(1)) * Cyclotomic(mpq_class(1, 2)));
    EXPECT_NEAR((double)oracle(x.canonical()).real(), (std::sqrt(5.0) + 1) / 2, 1e-15);
    EXPECT_THROW(real_sign(Cyclotomic::i()), NotReal);
}

TEST(Cyclo, RealSignOfTinyDifference) {
    // 99/70 is a close rational approximation of sqrt 2 (difference ~ 7e-5); 665857/470832 is ~ 1.6e-12 off.
    EXPECT_EQ(real_sign(Cyclotomic::sqrt(2) - Cyclotomic(mpq_class(99, 70))), Sign::negative);
    EXPECT_EQ(real_sign(Cyclotomic::sqrt(2) - Cyclotomic(mpq_class(665857, 470832))), Sign::negative);
    // 1393/985 sits just below sqrt 2.
    EXPECT_EQ(real_sign(Cyclotomic(mpq_class(1393, 985)) - Cyclotomic::sqrt(2)), Sign::negative);
}

TEST(Cyclo, IntervalEmbedding) {
    ComplexInterval one = to_complex(Cyclotomic(1), 64);
    EXPECT_EQ(one.mid(), std::complex<double>(1, 0));
    EXPECT_EQ(one.radius.to_double(), 0.0);

    ComplexInterval z = to_complex(Cyclotomic::root_of_unity(8, 1), 128);
    EXPECT_NEAR(z.mid().real(), std::sqrt(0.5), 1e-16);
    EXPECT_NEAR(z.mid().imag(), std::sqrt(0.5), 1e-16);
    EXPECT_LT(z.radius.to_double(), 1e-30);

    Cyclotomic v = (Cyclotomic(3) * Cyclotomic::sqrt(3) + Cyclotomic(7)) * Cyclotomic(mpq_class(1, 30));
    EXPECT_NEAR(to_complex(v, 64).mid().real(), (3 * std::sqrt(3.0) + 7) / 30, 1e-15);
    EXPECT_NEAR(to_complex(v, 64).mid().real(), 0.4065, 1e-4);
}

TEST(Cyclo, IntervalsContainHigherPrecisionValues) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; t++) {
        Cyclotomic a = random_element(rng);
        for (unsigned prec : {53u, 80u, 128u}) {
            ComplexInterval lo = to_complex(a, prec);
            ComplexInterval hi = to_complex(a, 2 * prec);
            EXPECT_TRUE(lo.contains(hi)) << a << " at " << prec;
        }
    }
}

TEST(Cyclo, StringForm) {
    Cyclotomic v = (Cyclotomic(1) - Cyclotomic::sqrt(2)) * Cyclotomic(mpq_class(1, 4));
    EXPECT_EQ(v.str(), "(1-E(8)+E(8)^3)/4");
    EXPECT_EQ(Cyclotomic(mpq_class(-1, 3)).str(), "-1/3");
    EXPECT_EQ(Cyclotomic().str(), "0");
    EXPECT_EQ(Cyclotomic::root_of_unity(3, 2).str(), "-1-E(3)");
}

TEST(Cyclo, JsonRoundTrip) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; t++) {
        Cyclotomic a = random_element(rng);
        nlohmann::json j = cyclo_to_json(a);
        Cyclotomic b = cyclo_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(a, b);
        EXPECT_EQ(cyclo_to_json(b), j);
    }
    EXPECT_THROW(cyclo_from_json(nlohmann::json{{"conductor", 4}, {"coeffs", {"1/0"}}}), std::invalid_argument);
    EXPECT_THROW(cyclo_from_json(nlohmann::json{{"conductor", 4}}), std::invalid_argument);
}

TEST(Cyclo, ConductorOverflowIsAnError) {
    EXPECT_THROW(Cyclotomic::root_of_unity(7919, 1), ConductorOverflow);
    Cyclotomic a = Cyclotomic::root_of_unity(71, 1), b = Cyclotomic::root_of_unity(73, 1);
    EXPECT_THROW(a * b, ConductorOverflow);
}

TEST(Cyclo, ExactZeroTest) {
    Cyclotomic x = Cyclotomic::sqrt(2) * Cyclotomic::sqrt(3) - Cyclotomic::sqrt(6);
    EXPECT_TRUE(x.is_zero());
    EXPECT_TRUE(x.canonical().is_zero());
}
