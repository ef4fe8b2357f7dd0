#ifndef _PERMAGIC_CYCLO_H
#define _PERMAGIC_CYCLO_H

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace permagic {

/// Largest conductor the arithmetic will lift to. Everything reachable from d <= 9
/// (2d-th roots, element orders of the searched groups, sqrt(2), sqrt(3), sqrt(5),
/// cos(2 pi / 7)) stays far below this.
constexpr int64_t MAX_CONDUCTOR = 5040;

struct ConductorOverflow : std::runtime_error {
    explicit ConductorOverflow(int64_t n);
};

struct NotReal : std::domain_error {
    NotReal();
};

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// The value is stored as rational coefficients on the power basis
/// 1, zeta_N, ..., zeta_N^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
/// That representation is unique for a fixed N, but N itself may be larger than the
/// smallest field containing the value. `canonical()` lowers N to the minimal conductor
/// (never congruent to 2 mod 4); string forms, JSON and hashing always go through it,
/// so two numbers are equal exactly when their canonical forms are identical.
///
/// Zero is represented by an empty coefficient list with conductor 1.
class Cyclotomic {
   public:
    Cyclotomic() = default;
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const mpq_class &value);  // NOLINT(google-explicit-constructor)

    /// zeta_n^k, with k reduced mod n.
    static Cyclotomic root_of_unity(int64_t n, int64_t k);
    /// Builds sum_e coeffs[e] * zeta_n^e for e in [0, n).
    static Cyclotomic from_exponents(int64_t n, const std::vector<mpq_class> &coeffs);
    /// Square root of a nonnegative integer, expressed with Gauss sums.
    static Cyclotomic sqrt(long n);
    /// cos(pi * r) and sin(pi * r) for rational r.
    static Cyclotomic cos_pi(const mpq_class &r);
    static Cyclotomic sin_pi(const mpq_class &r);
    static Cyclotomic i();

    int64_t conductor() const {
        return conductor_;
    }
    /// Power-basis coefficients at the current conductor (empty for zero).
    const std::vector<mpq_class> &coeffs() const {
        return coeffs_;
    }

    bool is_zero() const {
        return coeffs_.empty();
    }
    bool is_rational() const {
        return coeffs_.size() <= 1 && conductor_ == 1;
    }
    bool is_real() const;
    /// Requires is_rational().
    mpq_class rational_value() const;

    Cyclotomic canonical() const;
    /// Same value expressed at conductor m (conductor() must divide m).
    Cyclotomic lifted_to(int64_t m) const;

    Cyclotomic conj() const;
    /// Image under the Galois automorphism zeta -> zeta^k (gcd(k, N) = 1).
    Cyclotomic galois(int64_t k) const;
    Cyclotomic inverse() const;
    Cyclotomic pow(int64_t e) const;
    /// |x|^2 = x * conj(x).
    Cyclotomic abs2() const;

    Cyclotomic operator-() const;
    Cyclotomic &operator+=(const Cyclotomic &rhs);
    Cyclotomic &operator-=(const Cyclotomic &rhs);
    Cyclotomic &operator*=(const Cyclotomic &rhs);
    Cyclotomic &operator/=(const Cyclotomic &rhs);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) {
        a += b;
        return a;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) {
        a -= b;
        return a;
    }
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b) {
        return a * b.inverse();
    }
    bool operator==(const Cyclotomic &other) const;
    bool operator!=(const Cyclotomic &other) const {
        return !(*this == other);
    }

    /// GAP-style string of the canonical form, e.g. "(1-E(8)+E(8)^3)/4".
    std::string str() const;
    /// Quick double-precision embedding (no error bound); use to_complex() when one is needed.
    std::complex<double> approx() const;

   private:
    Cyclotomic(int64_t n, std::vector<mpq_class> coeffs);
    void normalize();

    int64_t conductor_ = 1;
    std::vector<mpq_class> coeffs_;
};

std::ostream &operator<<(std::ostream &out, const Cyclotomic &c);

enum class Sign { negative, zero, positive };

/// Exact sign of a real cyclotomic number. Zero is detected from the canonical form; otherwise
/// interval evaluation is repeated at doubling precision until the interval excludes zero.
/// Throws NotReal if x != conj(x).
Sign real_sign(const Cyclotomic &x);

/// Owning wrapper around an mpfr_t.
class BigFloat {
   public:
    explicit BigFloat(mpfr_prec_t precision = 64);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    mpfr_ptr get() {
        return value_;
    }
    mpfr_srcptr get() const {
        return value_;
    }
    double to_double() const;
    std::string str(int digits = 20) const;

   private:
    mpfr_t value_;
};

/// Rectangle [re_mid +- radius] x [im_mid +- radius] that contains the exact value.
struct ComplexInterval {
    BigFloat re_mid;
    BigFloat im_mid;
    BigFloat radius;
    mpfr_prec_t precision = 0;

    bool contains(const ComplexInterval &other) const;
    bool real_part_excludes_zero() const;
    std::complex<double> mid() const {
        return {re_mid.to_double(), im_mid.to_double()};
    }
};

/// Interval embedding into C. Width <= 2^(1-precision) * (1 + sum of |coefficients|).
ComplexInterval to_complex(const Cyclotomic &x, unsigned precision_bits);

namespace detail {
int64_t euler_phi(int64_t n);
std::vector<int64_t> prime_factors(int64_t n);
/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
const std::vector<long> &cyclotomic_polynomial(int64_t n);
}  // namespace detail

}  // namespace permagic

#endif
