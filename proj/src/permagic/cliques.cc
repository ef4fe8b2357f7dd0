#include "permagic/cliques.h"

#include <algorithm>
#include <functional>

namespace permagic {

std::vector<std::vector<size_t>> maximal_cliques(const std::vector<Bits> &adj) {
    size_t n = adj.size();
    std::vector<std::vector<size_t>> out;
    if (n == 0) {
        return out;
    }
    std::vector<size_t> current;
    // Bron-Kerbosch with Tomita pivoting.
    std::function<void(Bits, Bits)> expand = [&](Bits p, Bits x) {
        if (p.none() && x.none()) {
            std::vector<size_t> c = current;
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
            return;
        }
        Bits px = p | x;
        size_t pivot = px.find_first();
        size_t best = 0;
        for (size_t u = pivot; u != Bits::npos; u = px.find_next(u)) {
            size_t k = (p & adj[u]).count();
            if (k >= best) {
                best = k;
                pivot = u;
            }
        }
        Bits candidates = p - adj[pivot];
        for (size_t v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
            current.push_back(v);
            expand(p & adj[v], x & adj[v]);
            current.pop_back();
            p.reset(v);
            x.set(v);
        }
    };
    Bits all(n);
    all.set();
    expand(all, Bits(n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace permagic
