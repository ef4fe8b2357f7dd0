#ifndef _PERMAGIC_WIGNER_H
#define _PERMAGIC_WIGNER_H

#include <string>
#include <vector>

#include "permagic/matrix.h"

namespace permagic {

enum class Construction {
    /// A(q,p) = (1/d) sum_{j,m} w^(pj - qm) h(j,m) X^j Z^m with h = exp(i pi jm / d) for even d
    /// and h = w^(jm / 2), the half taken as the inverse of 2 mod d, for odd d.
    direct,
    /// Kronecker products of the prime-factor operators (composite d only).
    tensor,
    /// The direct formula with h = exp(i pi jm / d) for odd d as well. Kept for comparison only.
    half_angle,
};

std::string construction_name(Construction c);
Construction parse_construction(const std::string &name);

struct UnsupportedConstruction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonHermitianDensity : std::logic_error {
    using std::logic_error::logic_error;
};

struct PhasePointSet {
    size_t d = 0;
    Construction construction = Construction::direct;
    /// ops[q * d + p] = A(q, p).
    std::vector<CMatrix> ops;

    const CMatrix &at(size_t q, size_t p) const {
        return ops[q * d + p];
    }
};

/// Memoized; safe to call from several threads.
const PhasePointSet &phase_points(size_t d, Construction construction);
/// A single direct operator, computed from scratch.
CMatrix phase_point_direct(size_t d, size_t q, size_t p, Construction variant = Construction::direct);

struct WignerMatrix {
    size_t d = 0;
    /// Row-major, row = q, column = p.
    std::vector<Cyclotomic> entries;

    const Cyclotomic &at(size_t q, size_t p) const {
        return entries[q * d + p];
    }
    Cyclotomic sum() const;
    /// Rows of exact strings.
    std::string str() const;
    /// Layout with the common denominator pulled out, entries as decimals.
    std::string pretty() const;
};

/// W(q,p) = (1/d) tr(rho A(q,p)) with rho = |v><v| / <v|v>.
WignerMatrix wigner_function(const CVector &ray, const PhasePointSet &pps);
WignerMatrix wigner_of_density(const CMatrix &rho, const PhasePointSet &pps);

struct MagicMonotones {
    /// Sum of the negative entries (<= 0).
    Cyclotomic negative_sum;
    /// |negative_sum|.
    Cyclotomic sum_negativity;
    /// ln(2 sn + 1).
    double mana = 0;
    bool nonnegative = true;
};

MagicMonotones monotones(const WignerMatrix &w);

/// Structural checks used by the props report and the property tests.
struct PhasePointProperties {
    bool hermitian = false;
    bool unit_trace = false;
    bool trace_orthogonal = false;   // tr(A_a A_b) = d delta_ab
    bool striations = false;         // only evaluated for prime d
    bool striations_checked = false;
    bool sums_to_d_identity = false;  // sum_a A_a = d I
};
PhasePointProperties check_phase_points(const PhasePointSet &pps);

/// The d + 1 striations of Z_d x Z_d (prime d): striation s holds d parallel lines, each a
/// list of point indices q * d + p.
std::vector<std::vector<std::vector<size_t>>> striations(size_t d);

/// sum_a W(a) A_a.
CMatrix reconstruct_density(const WignerMatrix &w, const PhasePointSet &pps);

}  // namespace permagic

#endif
