#ifndef _PERMAGIC_GATES_H
#define _PERMAGIC_GATES_H

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "permagic/matrix.h"

namespace permagic {

constexpr size_t MAX_DEGREE = 9;

/// A permutation of {0, ..., d-1} in one-line notation: images[j] is the image of j.
struct Permutation {
    std::vector<uint8_t> images;

    Permutation() = default;
    explicit Permutation(std::vector<uint8_t> images);
    static Permutation identity(size_t degree);

    size_t degree() const {
        return images.size();
    }
    uint8_t operator()(size_t j) const {
        return images[j];
    }
    /// (a * b)(j) = a(b(j)), so gate(a * b) = gate(a) gate(b).
    Permutation operator*(const Permutation &b) const;
    Permutation inverse() const;
    Permutation pow(int64_t k) const;
    bool is_identity() const;
    size_t fixed_points() const;
    size_t order() const;
    /// Cycle lengths in decreasing order, fixed points included.
    std::vector<size_t> cycle_type() const;
    /// One-line images, 1-based, e.g. "(2,3,1)".
    std::string one_line() const;
    /// Disjoint cycles, 1-based, e.g. "(1,2,3)"; "()" for the identity.
    std::string cycles() const;

    bool operator==(const Permutation &o) const {
        return images == o.images;
    }
    bool operator!=(const Permutation &o) const {
        return images != o.images;
    }
    bool operator<(const Permutation &o) const {
        return images < o.images;
    }
};

struct PermutationHash {
    size_t operator()(const Permutation &p) const;
};

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class PermNotation { one_line, cycles };

/// Parses one permutation. One-line: "(2,1,3)" or "2 1 3" (1-based images). Cycles:
/// "(1,2)(3,4)" (1-based); `degree` pads cycle notation with fixed points.
Permutation parse_permutation(const std::string &text, PermNotation notation, size_t degree = 0);
/// Parses a ';'-separated generator list.
std::vector<Permutation> parse_generators(const std::string &text, PermNotation notation, size_t degree = 0);

/// 0/1 matrix with entry (i, j) = 1 iff p(j) = i, so gate * e_j = e_{p(j)}.
CMatrix gate_matrix(const Permutation &p);
/// Exactly one fixed point, i.e. exactly one 1 on the diagonal of the gate.
bool is_magic(const Permutation &p);

struct GateGroup {
    std::vector<Permutation> generators;
    /// Sorted, identity first.
    std::vector<Permutation> elements;

    size_t order() const {
        return elements.size();
    }
    size_t degree() const {
        return elements.empty() ? 0 : elements[0].degree();
    }
    /// Index into elements, or -1.
    int64_t index_of(const Permutation &p) const;
    bool contains(const Permutation &p) const {
        return index_of(p) >= 0;
    }
    bool is_abelian() const;
};

struct OrderCapExceeded : std::runtime_error {
    size_t partial_count;
    explicit OrderCapExceeded(size_t partial);
};

/// Breadth-first closure under right multiplication by the generators.
GateGroup close_group(const std::vector<Permutation> &generators, size_t order_cap);

struct Signature {
    size_t order = 0;
    /// element order -> number of elements of that order
    std::map<size_t, size_t> element_orders;
    bool abelian = true;

    std::string str() const;
    bool operator==(const Signature &o) const {
        return order == o.order && element_orders == o.element_orders && abelian == o.abelian;
    }
    bool operator<(const Signature &o) const;
};

Signature group_signature(const GateGroup &g);
/// Name from the signature table (A4, Z5:Z4, S5, A5, A6, Z7:Z6, PSL(2,7), Z2^3:Z7,
/// Z3^2:Z4, Z3^2:Z8, G144, ...), or "" when the signature is not in the table.
/// The (order, element-order multiset) pair is a heuristic that separates exactly these
/// groups; it is not an isomorphism test.
std::string signature_name(const Signature &s);
/// The table itself: name -> signature, each entry computed from an explicit permutation
/// representation so it can be checked independently.
const std::vector<std::pair<std::string, Signature>> &named_signatures();

/// Maximal cliques of the commuting graph on the non-identity elements, as sorted element
/// indices, in lexicographic order. min_size filters by clique size; maximum_only keeps only
/// the cliques of the largest size.
std::vector<std::vector<size_t>> commuting_cliques(const GateGroup &g, size_t min_size, bool maximum_only = false);

/// One conjugacy class of groups found by the magic pair search.
struct FoundGroup {
    GateGroup group;  // representative, generated by a magic pair
    Signature signature;
    std::string name;
    /// Distinct element sets in this S_d-conjugacy class that the search reached.
    size_t element_sets = 0;
    /// Orbits of ordered magic generating pairs under S_d conjugation (-1 when the group is
    /// too large for the pair count).
    int64_t pair_orbits = -1;
};

struct MagicPairSearch {
    size_t degree = 0;
    std::vector<FoundGroup> groups;  // sorted by (order, signature, generators)
    /// Pairs whose closure exceeded order_cap.
    size_t skipped_pairs = 0;
    size_t pairs_examined = 0;
    bool budget_exhausted = false;
};

struct SearchOptions {
    size_t order_cap = 5000;
    double budget_seconds = 0;  // 0 = unlimited
    /// Also accept pairs where one generator is a power of the other.
    bool allow_cyclic_pairs = false;
    /// Drop the magic requirement (used to count all two-generator groups at small d).
    bool any_generators = false;
    std::function<void(const std::string &)> progress;
};

/// Enumerates the groups generated by two magic permutations of degree d. The first generator
/// runs over one representative per cycle type, the second over orbit representatives of its
/// centralizer, and the resulting element sets are merged into S_d-conjugacy classes.
MagicPairSearch enumerate_magic_pairs(size_t d, const SearchOptions &options);

/// A permutation s with s G s^-1 = H, if one exists.
bool find_conjugator(const GateGroup &g, const GateGroup &h, Permutation *out);

/// Named groups with fixed magic generators: S3, A4, F20, S5, A5, A5b, A6, F42, PSL27, AGL18,
/// F36, F36b, AGL19, AGammaL19. The "b" variants are the second conjugacy class of the same
/// abstract group; both of them fix a point. Throws std::out_of_range for unknown names.
GateGroup named_group(const std::string &name);
std::vector<std::string> named_group_names();

}  // namespace permagic

#endif
