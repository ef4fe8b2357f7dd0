#include "permagic/cyclo.h"

#include <array>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace permagic {

ConductorOverflow::ConductorOverflow(int64_t n)
    : std::runtime_error(
          "cyclotomic conductor " + std::to_string(n) + " exceeds MAX_CONDUCTOR=" + std::to_string(MAX_CONDUCTOR)) {
}

NotReal::NotReal() : std::domain_error("cyclotomic number is not real") {
}

namespace detail {

int64_t euler_phi(int64_t n) {
    int64_t result = n;
    for (int64_t p : prime_factors(n)) {
        result = result / p * (p - 1);
    }
    return result;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

namespace {

// Everything the arithmetic needs to know about Q(zeta_n).
struct FieldData {
    int64_t n;
    int64_t phi;
    std::vector<long> poly;
    // reduction[e] = zeta_n^e on the power basis, stored sparsely.
    std::vector<std::vector<std::pair<int, long>>> reduction;
};

std::vector<long> exact_divide(std::vector<long> num, const std::vector<long> &den) {
    // den is monic.
    size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (size_t k = num.size(); k-- > dn;) {
        long c = num[k];
        q[k - dn] = c;
        if (c != 0) {
            for (size_t i = 0; i <= dn; i++) {
                num[k - dn + i] -= c * den[i];
            }
        }
    }
    return q;
}

std::unique_ptr<FieldData> build_field(int64_t n);

std::array<std::atomic<const FieldData *>, MAX_CONDUCTOR + 1> field_table{};
std::mutex field_mutex;
std::vector<std::unique_ptr<FieldData>> field_storage;

const FieldData &field(int64_t n) {
    if (n < 1 || n > MAX_CONDUCTOR) {
        throw ConductorOverflow(n);
    }
    const FieldData *f = field_table[n].load(std::memory_order_acquire);
    if (f != nullptr) {
        return *f;
    }
    std::lock_guard<std::mutex> lock(field_mutex);
    f = field_table[n].load(std::memory_order_acquire);
    if (f == nullptr) {
        field_storage.push_back(build_field(n));
        f = field_storage.back().get();
        field_table[n].store(f, std::memory_order_release);
    }
    return *f;
}

std::vector<long> compute_cyclotomic_polynomial(int64_t n) {
    // x^n - 1 divided by Phi_k for every proper divisor k of n.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int64_t k = 1; k < n; k++) {
        if (n % k == 0) {
            p = exact_divide(p, compute_cyclotomic_polynomial(k));
        }
    }
    return p;
}

std::unique_ptr<FieldData> build_field(int64_t n) {
    auto f = std::make_unique<FieldData>();
    f->n = n;
    f->phi = euler_phi(n);
    f->poly = compute_cyclotomic_polynomial(n);
    size_t phi = (size_t)f->phi;
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    f->reduction.resize(n);
    for (int64_t e = 0; e < n; e++) {
        auto &row = f->reduction[e];
        for (size_t i = 0; i < phi; i++) {
            if (cur[i] != 0) {
                row.emplace_back((int)i, cur[i]);
            }
        }
        // Multiply by x, then replace x^phi using the cyclotomic polynomial.
        long top = cur[phi - 1];
        for (size_t i = phi - 1; i > 0; i--) {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if (top != 0) {
            for (size_t i = 0; i < phi; i++) {
                cur[i] -= top * f->poly[i];
            }
        }
    }
    return f;
}

}  // namespace

const std::vector<long> &cyclotomic_polynomial(int64_t n) {
    return field(n).poly;
}

}  // namespace detail

namespace {

using detail::field;

int64_t mod(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

int64_t inverse_mod(int64_t a, int64_t n) {
    // n >= 1; a and n coprime.
    if (n == 1) {
        return 0;
    }
    int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod(t, n);
}

// Reduces a group-ring vector (coefficient per exponent in [0, n)) onto the power basis.
std::vector<mpq_class> reduce_ring(int64_t n, const std::vector<mpq_class> &ring) {
    const auto &f = field(n);
    std::vector<mpq_class> out((size_t)f.phi);
    for (int64_t e = 0; e < n; e++) {
        const mpq_class &c = ring[e];
        if (sgn(c) == 0) {
            continue;
        }
        for (const auto &[i, v] : f.reduction[e]) {
            out[i] += c * v;
        }
    }
    return out;
}

int64_t lcm_checked(int64_t a, int64_t b) {
    int64_t m = std::lcm(a, b);
    if (m > MAX_CONDUCTOR) {
        throw ConductorOverflow(m);
    }
    return m;
}

}  // namespace

Cyclotomic::Cyclotomic(long value) {
    if (value != 0) {
        coeffs_.emplace_back(value);
    }
}

Cyclotomic::Cyclotomic(const mpq_class &value) {
    if (sgn(value) != 0) {
        coeffs_.push_back(value);
        coeffs_.back().canonicalize();
    }
}

Cyclotomic::Cyclotomic(int64_t n, std::vector<mpq_class> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {
    normalize();
}

void Cyclotomic::normalize() {
    size_t last_nonzero = coeffs_.size();
    bool only_constant = true;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        if (sgn(coeffs_[i]) != 0) {
            last_nonzero = i;
            if (i != 0) {
                only_constant = false;
            }
        }
    }
    if (last_nonzero == coeffs_.size()) {
        coeffs_.clear();
        conductor_ = 1;
    } else if (only_constant) {
        coeffs_.resize(1);
        conductor_ = 1;
    }
}

Cyclotomic Cyclotomic::root_of_unity(int64_t n, int64_t k) {
    if (n < 1) {
        throw std::invalid_argument("root_of_unity needs n >= 1");
    }
    std::vector<mpq_class> ring(n);
    ring[mod(k, n)] = 1;
    return from_exponents(n, ring);
}

Cyclotomic Cyclotomic::from_exponents(int64_t n, const std::vector<mpq_class> &coeffs) {
    if ((int64_t)coeffs.size() != n) {
        throw std::invalid_argument("from_exponents needs exactly n coefficients");
    }
    return Cyclotomic(n, reduce_ring(n, coeffs));
}

Cyclotomic Cyclotomic::i() {
    return root_of_unity(4, 1);
}

namespace {

Cyclotomic sqrt_prime(long p) {
    if (p == 2) {
        return Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
    }
    // Quadratic Gauss sum g satisfies g^2 = (-1/p) p.
    std::vector<mpq_class> ring(p);
    for (long k = 1; k < p; k++) {
        mpz_class base = k, e = (p - 1) / 2, m = p, r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
        ring[k] = (r == 1) ? 1 : -1;
    }
    Cyclotomic g = Cyclotomic::from_exponents(p, ring);
    if (p % 4 == 1) {
        return g;
    }
    return -(Cyclotomic::i() * g);
}

}  // namespace

Cyclotomic Cyclotomic::sqrt(long n) {
    if (n < 0) {
        throw std::invalid_argument("Cyclotomic::sqrt needs n >= 0");
    }
    if (n == 0) {
        return {};
    }
    long square_part = 1;
    Cyclotomic result = 1;
    long rest = n;
    for (long p = 2; p * p <= rest || rest > 1; p++) {
        if (p * p > rest) {
            p = rest;
        }
        int count = 0;
        while (rest % p == 0) {
            rest /= p;
            count++;
        }
        for (int k = 0; k < count / 2; k++) {
            square_part *= p;
        }
        if (count % 2 == 1) {
            result *= sqrt_prime(p);
        }
    }
    return result * Cyclotomic(square_part);
}

Cyclotomic Cyclotomic::cos_pi(const mpq_class &r) {
    mpq_class q = r;
    q.canonicalize();
    long num = q.get_num().get_si();
    long den = q.get_den().get_si();
    return (root_of_unity(2 * den, num) + root_of_unity(2 * den, -num)) * Cyclotomic(mpq_class(1, 2));
}

Cyclotomic Cyclotomic::sin_pi(const mpq_class &r) {
    mpq_class q = r;
    q.canonicalize();
    long num = q.get_num().get_si();
    long den = q.get_den().get_si();
    // (z - z^-1) / (2i) = -i (z - z^-1) / 2
    return (root_of_unity(2 * den, num) - root_of_unity(2 * den, -num)) * i() * Cyclotomic(mpq_class(-1, 2));
}

bool Cyclotomic::is_real() const {
    return *this == conj();
}

mpq_class Cyclotomic::rational_value() const {
    if (!is_rational()) {
        throw std::domain_error("cyclotomic number is not rational: " + str());
    }
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::lifted_to(int64_t m) const {
    if (m == conductor_ || is_rational()) {
        if (m < 1 || m > MAX_CONDUCTOR) {
            throw ConductorOverflow(m);
        }
        return *this;
    }
    if (m % conductor_ != 0) {
        throw std::invalid_argument("lifted_to needs a multiple of the conductor");
    }
    int64_t step = m / conductor_;
    std::vector<mpq_class> ring(m);
    for (size_t e = 0; e < coeffs_.size(); e++) {
        ring[(int64_t)e * step] = coeffs_[e];
    }
    return Cyclotomic(m, reduce_ring(m, ring));
}

Cyclotomic Cyclotomic::galois(int64_t k) const {
    if (is_rational()) {
        return *this;
    }
    int64_t n = conductor_;
    if (std::gcd(mod(k, n), n) != 1) {
        throw std::invalid_argument("galois exponent must be coprime to the conductor");
    }
    std::vector<mpq_class> ring(n);
    for (size_t e = 0; e < coeffs_.size(); e++) {
        ring[mod(k * (int64_t)e, n)] = coeffs_[e];
    }
    return Cyclotomic(n, reduce_ring(n, ring));
}

Cyclotomic Cyclotomic::conj() const {
    return galois(-1);
}

Cyclotomic Cyclotomic::canonical() const {
    Cyclotomic x = *this;
    bool changed = true;
    while (changed && !x.is_rational()) {
        changed = false;
        int64_t n = x.conductor_;
        if (n % 4 == 2) {
            // Q(zeta_2h) = Q(zeta_h) for odd h; zeta_n^e = -zeta_h^((e+h)/2) for odd e.
            int64_t h = n / 2;
            std::vector<mpq_class> ring(h);
            for (size_t e = 0; e < x.coeffs_.size(); e++) {
                if (e % 2 == 0) {
                    ring[e / 2] += x.coeffs_[e];
                } else {
                    ring[((int64_t)e + h) / 2 % h] -= x.coeffs_[e];
                }
            }
            x = Cyclotomic(h, reduce_ring(h, ring));
            changed = true;
            continue;
        }
        for (int64_t p : detail::prime_factors(n)) {
            int64_t m = n / p;
            if (m % p == 0) {
                // Power basis of Q(zeta_n) is the tower basis zeta_m^a zeta_n^r, r < p.
                bool in_subfield = true;
                for (size_t e = 0; e < x.coeffs_.size(); e++) {
                    if ((int64_t)e % p != 0 && sgn(x.coeffs_[e]) != 0) {
                        in_subfield = false;
                        break;
                    }
                }
                if (in_subfield) {
                    std::vector<mpq_class> sub((size_t)detail::euler_phi(m));
                    for (size_t a = 0; a < sub.size() && a * p < x.coeffs_.size(); a++) {
                        sub[a] = x.coeffs_[a * p];
                    }
                    x = Cyclotomic(m, std::move(sub));
                    changed = true;
                    break;
                }
            } else {
                // p exactly divides n. Average over Gal(Q(zeta_n)/Q(zeta_m)) = (Z/p)^*, using
                // zeta_n^e = zeta_m^(e u) zeta_p^(e v) with u = p^-1 mod m, v = m^-1 mod p.
                int64_t u = inverse_mod(p, m);
                int64_t v = inverse_mod(m, p);
                std::vector<mpq_class> ring(m);
                for (size_t e = 0; e < x.coeffs_.size(); e++) {
                    if (sgn(x.coeffs_[e]) == 0) {
                        continue;
                    }
                    int64_t a = mod((int64_t)e * u, m);
                    if (mod((int64_t)e * v, p) == 0) {
                        ring[a] += x.coeffs_[e];
                    } else {
                        ring[a] -= x.coeffs_[e] / (p - 1);
                    }
                }
                Cyclotomic y(m, reduce_ring(m, ring));
                Cyclotomic back = y.lifted_to(n);
                if (back.coeffs_ == x.coeffs_ && back.conductor_ == x.conductor_) {
                    x = std::move(y);
                    changed = true;
                    break;
                }
            }
        }
    }
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    if (conductor_ != rhs.conductor_) {
        int64_t m = lcm_checked(conductor_, rhs.conductor_);
        Cyclotomic a = lifted_to(m);
        Cyclotomic b = rhs.lifted_to(m);
        if (a.coeffs_.size() < b.coeffs_.size()) {
            a.coeffs_.resize(b.coeffs_.size());
        }
        for (size_t i = 0; i < b.coeffs_.size(); i++) {
            a.coeffs_[i] += b.coeffs_[i];
        }
        a.conductor_ = m;
        a.normalize();
        *this = std::move(a);
        return *this;
    }
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (size_t i = 0; i < rhs.coeffs_.size(); i++) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &rhs) {
    return *this += -rhs;
}

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.is_rational() || b.is_rational()) {
        const Cyclotomic &scalar = a.is_rational() ? a : b;
        Cyclotomic r = a.is_rational() ? b : a;
        for (auto &c : r.coeffs_) {
            c *= scalar.coeffs_[0];
        }
        return r;
    }
    int64_t n = a.conductor_ == b.conductor_ ? a.conductor_ : lcm_checked(a.conductor_, b.conductor_);
    Cyclotomic x_storage, y_storage;
    const Cyclotomic *xp = &a, *yp = &b;
    if (a.conductor_ != n) {
        x_storage = a.lifted_to(n);
        xp = &x_storage;
    }
    if (b.conductor_ != n) {
        y_storage = b.lifted_to(n);
        yp = &y_storage;
    }
    std::vector<mpq_class> ring(n);
    const auto &xc = xp->coeffs_;
    const auto &yc = yp->coeffs_;
    for (size_t i = 0; i < xc.size(); i++) {
        if (sgn(xc[i]) == 0) {
            continue;
        }
        for (size_t j = 0; j < yc.size(); j++) {
            if (sgn(yc[j]) == 0) {
                continue;
            }
            size_t e = i + j;
            if ((int64_t)e >= n) {
                e -= n;
            }
            ring[e] += xc[i] * yc[j];
        }
    }
    return Cyclotomic(n, reduce_ring(n, ring));
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &rhs) {
    *this = *this * rhs;
    return *this;
}

Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &rhs) {
    *this = *this * rhs.inverse();
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero cyclotomic number");
    }
    if (is_rational()) {
        mpq_class q = 1 / coeffs_[0];
        return Cyclotomic(q);
    }
    // x^-1 = (product of the other Galois conjugates) / norm(x).
    Cyclotomic x = canonical();
    int64_t n = x.conductor_;
    Cyclotomic others = 1;
    for (int64_t k = 2; k < n; k++) {
        if (std::gcd(k, n) == 1) {
            others *= x.galois(k);
        }
    }
    Cyclotomic norm = x * others;
    return others * Cyclotomic(mpq_class(1 / norm.rational_value()));
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Cyclotomic result = 1;
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Cyclotomic Cyclotomic::abs2() const {
    return *this * conj();
}

bool Cyclotomic::operator==(const Cyclotomic &other) const {
    if (conductor_ == other.conductor_) {
        return coeffs_ == other.coeffs_;
    }
    return (*this - other).is_zero();
}

std::string Cyclotomic::str() const {
    Cyclotomic x = canonical();
    if (x.is_zero()) {
        return "0";
    }
    if (x.is_rational()) {
        return x.coeffs_[0].get_str();
    }
    mpz_class den = 1;
    for (const auto &c : x.coeffs_) {
        if (sgn(c) != 0) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    std::string body;
    int terms = 0;
    for (size_t e = 0; e < x.coeffs_.size(); e++) {
        if (sgn(x.coeffs_[e]) == 0) {
            continue;
        }
        mpq_class scaled = x.coeffs_[e] * den;
        mpz_class num = scaled.get_num();
        bool negative = sgn(num) < 0;
        mpz_class magnitude = abs(num);
        std::string monomial;
        if (e == 1) {
            monomial = "E(" + std::to_string(x.conductor_) + ")";
        } else if (e > 1) {
            monomial = "E(" + std::to_string(x.conductor_) + ")^" + std::to_string(e);
        }
        std::string term;
        if (monomial.empty()) {
            term = magnitude.get_str();
        } else if (magnitude == 1) {
            term = monomial;
        } else {
            term = magnitude.get_str() + "*" + monomial;
        }
        if (terms == 0) {
            body += negative ? "-" + term : term;
        } else {
            body += (negative ? "-" : "+") + term;
        }
        terms++;
    }
    if (den == 1) {
        return body;
    }
    if (terms == 1) {
        return body + "/" + den.get_str();
    }
    return "(" + body + ")/" + den.get_str();
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> acc = 0;
    for (size_t e = 0; e < coeffs_.size(); e++) {
        if (sgn(coeffs_[e]) == 0) {
            continue;
        }
        double angle = 2.0 * M_PI * (double)e / (double)conductor_;
        acc += coeffs_[e].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::ostream &operator<<(std::ostream &out, const Cyclotomic &c) {
    return out << c.str();
}

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat &other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(value_);
}

double BigFloat::to_double() const {
    return mpfr_get_d(value_, MPFR_RNDN);
}

std::string BigFloat::str(int digits) const {
    char *buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), value_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

ComplexInterval to_complex(const Cyclotomic &x, unsigned precision_bits) {
    if (precision_bits < 53) {
        throw std::invalid_argument("to_complex needs at least 53 bits of precision");
    }
    mpfr_prec_t work = (mpfr_prec_t)precision_bits + 32;
    ComplexInterval out{BigFloat(work), BigFloat(work), BigFloat(work), (mpfr_prec_t)precision_bits};

    if (x.is_rational()) {
        mpq_class q = x.rational_value();
        int inexact = mpfr_set_q(out.re_mid.get(), q.get_mpq_t(), MPFR_RNDN);
        if (inexact != 0) {
            // Half an ulp of a number below |q| + 1.
            mpq_class bound = abs(q) + 1;
            mpfr_set_q(out.radius.get(), bound.get_mpq_t(), MPFR_RNDU);
            mpfr_mul_2si(out.radius.get(), out.radius.get(), -work, MPFR_RNDU);
        }
        return out;
    }

    int64_t n = x.conductor();
    const auto &coeffs = x.coeffs();
    BigFloat pi(work), angle(work), s(work), c(work), coef(work), term(work);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpq_class magnitude = 0;
    for (size_t e = 0; e < coeffs.size(); e++) {
        if (sgn(coeffs[e]) == 0) {
            continue;
        }
        magnitude += abs(coeffs[e]);
        mpfr_mul_si(angle.get(), pi.get(), 2 * (long)e, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), (long)n, MPFR_RNDN);
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        mpfr_set_q(coef.get(), coeffs[e].get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term.get(), coef.get(), c.get(), MPFR_RNDN);
        mpfr_add(out.re_mid.get(), out.re_mid.get(), term.get(), MPFR_RNDN);
        mpfr_mul(term.get(), coef.get(), s.get(), MPFR_RNDN);
        mpfr_add(out.im_mid.get(), out.im_mid.get(), term.get(), MPFR_RNDN);
    }
    // Each term carries relative error below ~(8 pi + 6) 2^-work (argument rounding, sin/cos,
    // coefficient conversion, product); the running sums add one more rounding per term.
    // (phi + 40) * sum|c| * 2^-work covers both.
    mpq_class bound = magnitude * (int)(coeffs.size() + 40);
    mpfr_set_q(out.radius.get(), bound.get_mpq_t(), MPFR_RNDU);
    mpfr_mul_2si(out.radius.get(), out.radius.get(), -work, MPFR_RNDU);
    return out;
}

bool ComplexInterval::contains(const ComplexInterval &other) const {
    mpfr_prec_t p = std::max(mpfr_get_prec(re_mid.get()), mpfr_get_prec(other.re_mid.get())) + 64;
    BigFloat diff(p), slack(p);
    for (int part = 0; part < 2; part++) {
        const BigFloat &a = part == 0 ? re_mid : im_mid;
        const BigFloat &b = part == 0 ? other.re_mid : other.im_mid;
        mpfr_sub(diff.get(), a.get(), b.get(), MPFR_RNDN);
        mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
        mpfr_add(diff.get(), diff.get(), other.radius.get(), MPFR_RNDU);
        mpfr_set(slack.get(), radius.get(), MPFR_RNDD);
        if (mpfr_cmp(diff.get(), slack.get()) > 0) {
            return false;
        }
    }
    return true;
}

bool ComplexInterval::real_part_excludes_zero() const {
    BigFloat a(mpfr_get_prec(re_mid.get()));
    mpfr_abs(a.get(), re_mid.get(), MPFR_RNDD);
    return mpfr_cmp(a.get(), radius.get()) > 0;
}

Sign real_sign(const Cyclotomic &x) {
    if (!x.is_real()) {
        throw NotReal();
    }
    if (x.is_zero()) {
        return Sign::zero;
    }
    if (x.is_rational()) {
        return sgn(x.rational_value()) < 0 ? Sign::negative : Sign::positive;
    }
    for (unsigned precision = 64;; precision *= 2) {
        ComplexInterval iv = to_complex(x, precision);
        if (iv.real_part_excludes_zero()) {
            return mpfr_sgn(iv.re_mid.get()) < 0 ? Sign::negative : Sign::positive;
        }
    }
}

}  // namespace permagic
