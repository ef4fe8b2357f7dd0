#ifndef _PERMAGIC_CLIQUES_H
#define _PERMAGIC_CLIQUES_H

#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace permagic {

using Bits = boost::dynamic_bitset<>;

/// All maximal cliques of an undirected graph given by symmetric adjacency rows (no self loops),
/// each sorted ascending, the list sorted lexicographically.
std::vector<std::vector<size_t>> maximal_cliques(const std::vector<Bits> &adj);

}  // namespace permagic

#endif
