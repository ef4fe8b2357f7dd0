#ifndef _PERMAGIC_CONTEXT_H
#define _PERMAGIC_CONTEXT_H

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permagic/cliques.h"
#include "permagic/matrix.h"
#include "permagic/spectra.h"

namespace permagic {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Orthogonality graph: one vertex per ray, an edge whenever the exact inner product vanishes.
struct OrthoGraph {
    std::vector<CVector> rays;
    /// Same length as rays; Tag::unclassified when the caller has no classification.
    std::vector<Tag> tags;
    std::vector<Bits> adj;

    size_t size() const {
        return rays.size();
    }
    bool edge(size_t a, size_t b) const {
        return adj[a].test(b);
    }
    size_t edge_count() const;
};

OrthoGraph build_graph(const std::vector<CVector> &rays, std::vector<Tag> tags = {});
OrthoGraph build_graph(const EigenReport &report);

/// Subgraph induced on the given vertices (in that order).
OrthoGraph induced_subgraph(const OrthoGraph &g, const std::vector<size_t> &vertices);

std::vector<std::vector<size_t>> maximal_cliques(const OrthoGraph &g);
/// clique size -> number of maximal cliques of that size.
std::map<size_t, size_t> clique_profile(const OrthoGraph &g);

/// A 5-cycle given in cyclic order starting at its smallest vertex, second entry smaller than the last.
using Pentagon = std::array<size_t, 5>;

/// Induced 5-cycles: the five vertices span exactly the five cycle edges. Each vertex set is
/// reported once, sorted lexicographically.
std::vector<Pentagon> find_pentagons(const OrthoGraph &g);
/// Every 5-cycle, chords allowed, each counted once up to rotation and reflection.
size_t count_all_five_cycles(const OrthoGraph &g);

/// Exact independence number by branch and bound (maximum clique of the complement with a greedy
/// colouring bound). Throws BudgetExceeded after max_nodes search nodes.
size_t independence_number(const OrthoGraph &g, size_t max_nodes = 50'000'000);

struct WitnessReport {
    std::vector<size_t> vertices;
    size_t alpha = 0;
    /// Largest eigenvalue of the sum of the vertex projectors.
    double witness_max = 0;
    /// Certified bound on |witness_max - exact eigenvalue| (residual plus rounding).
    double error_bound = 0;
    /// Tr(sigma rho*) re-evaluated with the top eigenvector.
    double reevaluated = 0;
    bool contextual = false;
    /// |witness_max - alpha| within the 1e-6 margin.
    bool inconclusive = false;
    /// Lovasz number when known (sqrt 5 for an induced pentagon).
    std::optional<double> theta_reference;
    std::vector<std::complex<double>> optimal_state;
};

constexpr double CONTEXTUALITY_MARGIN = 1e-6;

WitnessReport witness_check(const std::vector<size_t> &vertices, const OrthoGraph &g);

struct PentagonComposition {
    Pentagon vertices;
    size_t stabilizer = 0;
    size_t magic = 0;
    /// amplitude_pattern of each magic vertex, in cycle order.
    std::vector<std::string> magic_patterns;
};

struct PentagonCensus {
    std::vector<PentagonComposition> pentagons;
    /// (stabilizer vertices, magic vertices) -> number of pentagons.
    std::map<std::pair<size_t, size_t>, size_t> composition_histogram;
    /// Amplitude pattern -> occurrences among magic vertices of all pentagons.
    std::map<std::string, size_t> magic_patterns;
};

PentagonCensus pentagon_census(const OrthoGraph &g, const std::vector<Pentagon> &pentagons);
PentagonCensus pentagon_census(const EigenReport &report);

/// Graphviz rendering: stabilizer rays as large black dots, magic rays as small dots, labels
/// are the exact amplitude strings.
std::string to_dot(const OrthoGraph &g, const std::string &name = "ortho");

}  // namespace permagic

#endif
