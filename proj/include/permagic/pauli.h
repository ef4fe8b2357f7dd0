#ifndef _PERMAGIC_PAULI_H
#define _PERMAGIC_PAULI_H

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "permagic/matrix.h"

namespace permagic {

/// Prime factors of d with multiplicity, smallest first: 4 -> {2,2}, 6 -> {2,3}, 9 -> {3,3}.
std::vector<size_t> tensor_factors(size_t d);
bool is_prime(size_t d);

/// X|j> = |j+1 mod d>.
CMatrix shift_operator(size_t d);
/// Z|j> = w^j |j>, w = exp(2 pi i / d).
CMatrix clock_operator(size_t d);

/// T_(m,j) = phase * Z^m X^j with phase i^(jm) for d = 2 and exp(-i pi j m / d) otherwise.
/// The phase is the one printed with the Pauli operators; d may be any size here, but the
/// stabilizer machinery only calls it with prime d.
CMatrix pauli_operator(size_t d, size_t m, size_t j);

enum class StabilizerConstruction {
    /// Kronecker products of prime-dimension Pauli groups (d = 6 is qubit x qutrit).
    tensor,
    /// The single Z_d x Z_d Heisenberg-Weyl group of dimension d.
    single_qudit,
};

struct StabilizerSet {
    size_t d = 0;
    StabilizerConstruction construction = StabilizerConstruction::tensor;
    /// Canonical rays (first nonzero amplitude 1), sorted by key.
    std::vector<CVector> rays;
    std::unordered_set<std::string> keys;

    bool contains(const CVector &ray) const;
};

/// All stabilizer rays of dimension d: joint eigenrays of the maximal isotropic subgroups of
/// the Pauli group. Memoized per (d, construction); when PERMAGIC_CACHE_DIR is set the result
/// is also stored there as JSON and reloaded on later runs (a bad file is recomputed).
std::shared_ptr<const StabilizerSet> enumerate_stabilizer_rays(
    size_t d, StabilizerConstruction construction = StabilizerConstruction::tensor);

bool is_stabilizer(const CVector &ray, StabilizerConstruction construction = StabilizerConstruction::tensor);

/// Closed-form count for the tensor construction: prod over primes p of
/// p^n prod_{k=1..n} (p^k + 1), n = multiplicity of p in d.
size_t stabilizer_count_formula(size_t d);

struct LabeledPauli {
    /// (m, j) per tensor factor.
    std::vector<std::pair<size_t, size_t>> labels;
    CMatrix matrix;
};

/// Generators of every maximal isotropic subgroup of the tensor-factor Pauli group.
std::vector<std::vector<LabeledPauli>> maximal_isotropic_generators(size_t d, StabilizerConstruction construction);

}  // namespace permagic

#endif
