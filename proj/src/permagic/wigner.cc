#include "permagic/wigner.h"

#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include "permagic/pauli.h"

namespace permagic {

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::direct:
            return "direct";
        case Construction::tensor:
            return "tensor";
        case Construction::half_angle:
            return "half_angle";
    }
    return "?";
}

Construction parse_construction(const std::string &name) {
    if (name == "direct") {
        return Construction::direct;
    }
    if (name == "tensor") {
        return Construction::tensor;
    }
    if (name == "half_angle") {
        return Construction::half_angle;
    }
    throw UnsupportedConstruction("unknown construction '" + name + "'");
}

CMatrix phase_point_direct(size_t d, size_t q, size_t p, Construction variant) {
    int64_t n = d;
    bool use_inverse_of_two = variant == Construction::direct && d % 2 == 1;
    int64_t half = (n + 1) / 2;  // 2^-1 mod d for odd d
    Cyclotomic scale(mpq_class(1, d));
    CMatrix a(d, d);
    // (X^j Z^m)_{c+j, c} = w^(m c): entry (r, c) collects j = r - c.
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            int64_t j = ((int64_t)r - (int64_t)c + n) % n;
            std::vector<mpq_class> ring(2 * n);
            for (int64_t m = 0; m < n; m++) {
                // Exponent of exp(i pi / d) = zeta_{2d}.
                int64_t e = 2 * ((int64_t)p * j - (int64_t)q * m + m * (int64_t)c);
                if (use_inverse_of_two) {
                    e += 2 * (j * m % n) * half;
                } else {
                    e += j * m;
                }
                e %= 2 * n;
                if (e < 0) {
                    e += 2 * n;
                }
                ring[e] += 1;
            }
            a(r, c) = Cyclotomic::from_exponents(2 * n, ring) * scale;
        }
    }
    return a;
}

namespace {

PhasePointSet build_phase_points(size_t d, Construction construction) {
    PhasePointSet s;
    s.d = d;
    s.construction = construction;
    if (construction != Construction::tensor) {
        for (size_t q = 0; q < d; q++) {
            for (size_t p = 0; p < d; p++) {
                s.ops.push_back(phase_point_direct(d, q, p, construction));
            }
        }
        return s;
    }
    std::vector<size_t> factors = tensor_factors(d);
    if (factors.size() < 2) {
        throw UnsupportedConstruction("the tensor construction needs a composite dimension, got " +
                                      std::to_string(d));
    }
    std::vector<const PhasePointSet *> base;
    for (size_t f : factors) {
        base.push_back(&phase_points(f, Construction::direct));
    }
    s.ops.assign(d * d, CMatrix());
    // Flattened index over factor points: row-major over factors, each local point contributing
    // q f + ((f - p) mod f). Then row = idx / d and column = idx % d.
    std::vector<size_t> digits(factors.size(), 0);  // local point q * f + p per factor
    while (true) {
        CMatrix op = CMatrix::identity(1);
        size_t idx = 0;
        for (size_t k = 0; k < factors.size(); k++) {
            size_t f = factors[k];
            size_t q = digits[k] / f, p = digits[k] % f;
            op = kron(op, base[k]->at(q, p));
            idx = idx * f * f + q * f + (f - p) % f;
        }
        s.ops[idx] = std::move(op);
        size_t k = factors.size();
        while (k > 0) {
            k--;
            if (++digits[k] < factors[k] * factors[k]) {
                break;
            }
            digits[k] = 0;
            if (k == 0) {
                return s;
            }
        }
    }
}

}  // namespace

const PhasePointSet &phase_points(size_t d, Construction construction) {
    if (d < 2 || d > 9) {
        throw std::invalid_argument("phase points support 2 <= d <= 9");
    }
    static std::recursive_mutex mutex;
    static std::map<std::pair<size_t, int>, std::unique_ptr<PhasePointSet>> memo;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto key = std::make_pair(d, (int)construction);
    auto it = memo.find(key);
    if (it == memo.end()) {
        auto built = std::make_unique<PhasePointSet>(build_phase_points(d, construction));
        it = memo.emplace(key, std::move(built)).first;
    }
    return *it->second;
}

Cyclotomic WignerMatrix::sum() const {
    Cyclotomic s;
    for (const auto &x : entries) {
        s += x;
    }
    return s;
}

std::string WignerMatrix::str() const {
    std::string out;
    for (size_t q = 0; q < d; q++) {
        out += "[";
        for (size_t p = 0; p < d; p++) {
            if (p) {
                out += ", ";
            }
            out += at(q, p).str();
        }
        out += "]\n";
    }
    return out;
}

std::string WignerMatrix::pretty() const {
    // Pull out the lcm of rational denominators when every entry is rational; otherwise print
    // decimals directly.
    bool rational = true;
    mpz_class den = 1;
    for (const auto &x : entries) {
        if (!x.is_rational()) {
            rational = false;
            break;
        }
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_value().get_den_mpz_t());
    }
    std::ostringstream out;
    if (rational && den != 1) {
        out << "1/" << den.get_str() << " *\n";
    }
    for (size_t q = 0; q < d; q++) {
        for (size_t p = 0; p < d; p++) {
            const Cyclotomic &x = at(q, p);
            if (rational) {
                mpq_class v = x.rational_value() * den;
                out << std::setw(6) << v.get_str();
            } else {
                out << std::setw(10) << std::fixed << std::setprecision(5) << x.approx().real();
            }
        }
        out << "\n";
    }
    return out.str();
}

WignerMatrix wigner_of_density(const CMatrix &rho, const PhasePointSet &pps) {
    if (rho.rows() != pps.d || rho.cols() != pps.d) {
        throw std::invalid_argument("density matrix dimension does not match the phase points");
    }
    WignerMatrix w;
    w.d = pps.d;
    Cyclotomic scale(mpq_class(1, pps.d));
    for (const auto &a : pps.ops) {
        Cyclotomic v = trace_of_product(rho, a) * scale;
        if (v != v.conj()) {
            throw NonHermitianDensity("Wigner entry is not real: " + v.str());
        }
        w.entries.push_back(v.canonical());
    }
    return w;
}

WignerMatrix wigner_function(const CVector &ray, const PhasePointSet &pps) {
    if (ray.size() != pps.d) {
        throw std::invalid_argument("ray dimension does not match the phase points");
    }
    Cyclotomic norm = inner(ray, ray);
    if (norm.is_zero()) {
        throw std::invalid_argument("zero vector has no Wigner function");
    }
    WignerMatrix w;
    w.d = pps.d;
    Cyclotomic scale = (norm * Cyclotomic(mpq_class(pps.d))).inverse();
    for (const auto &a : pps.ops) {
        Cyclotomic v = expectation(a, ray) * scale;
        if (v != v.conj()) {
            throw NonHermitianDensity("Wigner entry is not real: " + v.str());
        }
        w.entries.push_back(v.canonical());
    }
    return w;
}

MagicMonotones monotones(const WignerMatrix &w) {
    MagicMonotones m;
    for (const auto &x : w.entries) {
        if (real_sign(x) == Sign::negative) {
            m.negative_sum += x;
            m.nonnegative = false;
        }
    }
    m.negative_sum = m.negative_sum.canonical();
    m.sum_negativity = (-m.negative_sum).canonical();
    ComplexInterval iv = to_complex(m.sum_negativity, 64);
    m.mana = std::log(2 * iv.re_mid.to_double() + 1);
    return m;
}

std::vector<std::vector<std::vector<size_t>>> striations(size_t d) {
    std::vector<std::pair<size_t, size_t>> directions;
    directions.emplace_back(0, 1);
    for (size_t k = 0; k < d; k++) {
        directions.emplace_back(1, k);
    }
    std::vector<std::vector<std::vector<size_t>>> out;
    for (auto [v1, v2] : directions) {
        std::vector<std::vector<size_t>> lines(d);
        for (size_t q = 0; q < d; q++) {
            for (size_t p = 0; p < d; p++) {
                // Points with equal cross product against the direction lie on one line.
                size_t c = ((v1 * p + d * d - v2 * q) % d);
                lines[c].push_back(q * d + p);
            }
        }
        out.push_back(std::move(lines));
    }
    return out;
}

PhasePointProperties check_phase_points(const PhasePointSet &pps) {
    PhasePointProperties r;
    size_t d = pps.d;
    r.hermitian = true;
    r.unit_trace = true;
    CMatrix total(d, d);
    for (const auto &a : pps.ops) {
        r.hermitian &= a.is_hermitian();
        r.unit_trace &= a.trace() == Cyclotomic(1);
        total += a;
    }
    r.sums_to_d_identity = total == CMatrix::identity(d).scaled(Cyclotomic((long)d));
    r.trace_orthogonal = true;
    for (size_t x = 0; x < pps.ops.size() && r.trace_orthogonal; x++) {
        for (size_t y = x; y < pps.ops.size(); y++) {
            Cyclotomic t = trace_of_product(pps.ops[x], pps.ops[y]);
            if (t != Cyclotomic(x == y ? (long)d : 0L)) {
                r.trace_orthogonal = false;
                break;
            }
        }
    }
    if (is_prime(d)) {
        r.striations_checked = true;
        r.striations = true;
        Cyclotomic scale(mpq_class(1, d));
        for (const auto &lines : striations(d)) {
            std::vector<CMatrix> projectors;
            CMatrix sum(d, d);
            for (const auto &line : lines) {
                CMatrix pl(d, d);
                for (size_t idx : line) {
                    pl += pps.ops[idx];
                }
                pl = pl.scaled(scale);
                sum += pl;
                projectors.push_back(std::move(pl));
            }
            r.striations &= sum == CMatrix::identity(d);
            for (size_t a = 0; a < projectors.size(); a++) {
                r.striations &= projectors[a] * projectors[a] == projectors[a];
                for (size_t b = a + 1; b < projectors.size(); b++) {
                    r.striations &= (projectors[a] * projectors[b]).is_zero();
                }
            }
        }
    }
    return r;
}

CMatrix reconstruct_density(const WignerMatrix &w, const PhasePointSet &pps) {
    CMatrix rho(pps.d, pps.d);
    for (size_t k = 0; k < pps.ops.size(); k++) {
        if (!w.entries[k].is_zero()) {
            rho += pps.ops[k].scaled(w.entries[k]);
        }
    }
    return rho;
}

}  // namespace permagic
