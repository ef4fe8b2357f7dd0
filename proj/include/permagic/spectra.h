#ifndef _PERMAGIC_SPECTRA_H
#define _PERMAGIC_SPECTRA_H

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permagic/gates.h"
#include "permagic/matrix.h"
#include "permagic/pauli.h"

namespace permagic {

enum class Tag { stabilizer, magic, unclassified };
std::string tag_name(Tag t);

struct Ray {
    /// Canonical amplitudes (first nonzero = 1).
    CVector amplitudes;
    std::string key;
    Tag tag = Tag::unclassified;
    /// Indices of the cliques whose joint eigenspaces produced this ray.
    std::vector<size_t> provenance;
};

struct NonCommutingClique : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Rays spanning the joint eigenspaces of a set of commuting permutation gates: every joint
/// eigenspace contributes the rows of its reduced echelon basis (one ray when the space is
/// one-dimensional). Eigenvalue candidates are the k-th roots of unity for each gate's order k.
/// With plus_minus_one_only, only spaces whose eigenvalues are all +1 or -1 are kept.
/// Throws NonCommutingClique for non-commuting input and std::invalid_argument for an empty
/// clique or one containing the identity or a repeated gate.
std::vector<CVector> joint_eigenrays(const std::vector<Permutation> &clique, bool plus_minus_one_only = false);

struct ClassifyOptions {
    /// Smallest clique kept. 1 admits gates that commute with nothing but their own powers.
    size_t min_clique_size = 1;
    /// Keep only cliques of the largest size.
    bool maximum_only = false;
    /// Keep only cliques of exactly this size (0 = off).
    size_t exact_clique_size = 0;
    bool plus_minus_one_only = false;
    /// Drop magic rays whose amplitudes are not all in {0, 1, -1} (applied for d >= 5).
    bool paper_restriction = false;
    StabilizerConstruction stabilizers = StabilizerConstruction::tensor;
};

struct EigenReport {
    std::string group_name;
    Signature signature;
    size_t d = 0;
    /// Cliques examined, as element indices into the group.
    std::vector<std::vector<size_t>> cliques;
    /// Sorted by key.
    std::vector<Ray> rays;
    size_t stabilizer_count = 0;
    size_t magic_count = 0;
    size_t unclassified_count = 0;
    /// Magic rays removed by the {0, +-1} entry restriction.
    size_t restricted_away = 0;

    std::vector<CVector> amplitudes() const;
    std::vector<Tag> tags() const;
};

EigenReport classify_group(const GateGroup &g, const ClassifyOptions &options);

struct ReferenceState {
    std::string name;
    size_t d = 0;
    /// Exact amplitudes when they are cyclotomic.
    std::optional<CVector> exact;
    /// The exact density matrix (available for every named state, including T).
    CMatrix density;
    /// Normalized amplitudes in double precision.
    std::vector<std::complex<double>> numeric;
};

/// zero, one, plus, minus, plus_i, minus_i, H, T, norrell, strange.
ReferenceState reference_state(const std::string &name);
std::vector<std::string> reference_state_names();

}  // namespace permagic

#endif
