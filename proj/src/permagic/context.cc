#include "permagic/context.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Dense>

#include "permagic/ray.h"

namespace permagic {

size_t OrthoGraph::edge_count() const {
    size_t twice = 0;
    for (const auto &row : adj) {
        twice += row.count();
    }
    return twice / 2;
}

OrthoGraph build_graph(const std::vector<CVector> &rays, std::vector<Tag> tags) {
    OrthoGraph g;
    if (tags.empty()) {
        tags.assign(rays.size(), Tag::unclassified);
    }
    if (tags.size() != rays.size()) {
        throw std::invalid_argument("build_graph: tag count differs from ray count");
    }
    for (const auto &r : rays) {
        if (r.size() != rays[0].size()) {
            throw DimensionMismatch("build_graph: rays of different dimensions");
        }
    }
    g.rays = rays;
    g.tags = std::move(tags);
    size_t n = rays.size();
    g.adj.assign(n, Bits(n));
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (inner(rays[a], rays[b]).is_zero()) {
                g.adj[a].set(b);
                g.adj[b].set(a);
            }
        }
    }
    return g;
}

OrthoGraph build_graph(const EigenReport &report) {
    return build_graph(report.amplitudes(), report.tags());
}

OrthoGraph induced_subgraph(const OrthoGraph &g, const std::vector<size_t> &vertices) {
    OrthoGraph h;
    size_t n = vertices.size();
    h.adj.assign(n, Bits(n));
    for (size_t a = 0; a < n; a++) {
        h.rays.push_back(g.rays.at(vertices[a]));
        h.tags.push_back(g.tags.at(vertices[a]));
        for (size_t b = 0; b < n; b++) {
            if (a != b && g.edge(vertices[a], vertices[b])) {
                h.adj[a].set(b);
            }
        }
    }
    return h;
}

std::vector<std::vector<size_t>> maximal_cliques(const OrthoGraph &g) {
    return maximal_cliques(g.adj);
}

std::map<size_t, size_t> clique_profile(const OrthoGraph &g) {
    std::map<size_t, size_t> out;
    for (const auto &c : maximal_cliques(g)) {
        out[c.size()]++;
    }
    return out;
}

namespace {

// Walks paths a-b-c-d-e-a with a the smallest vertex and b < e, so each cycle is met once.
template <typename Visit>
void five_cycles(const OrthoGraph &g, bool induced, Visit visit) {
    size_t n = g.size();
    for (size_t a = 0; a < n; a++) {
        const Bits &na = g.adj[a];
        for (size_t b = na.find_next(a); b != Bits::npos; b = na.find_next(b)) {
            const Bits &nb = g.adj[b];
            for (size_t c = nb.find_next(a); c != Bits::npos; c = nb.find_next(c)) {
                if (c == b || (induced && na.test(c))) {
                    continue;
                }
                const Bits &nc = g.adj[c];
                for (size_t d = nc.find_next(a); d != Bits::npos; d = nc.find_next(d)) {
                    if (d == b || d == c || (induced && (na.test(d) || nb.test(d)))) {
                        continue;
                    }
                    const Bits &nd = g.adj[d];
                    for (size_t e = nd.find_next(b); e != Bits::npos; e = nd.find_next(e)) {
                        if (e == c || e == d || !na.test(e) || (induced && (nb.test(e) || nc.test(e)))) {
                            continue;
                        }
                        visit(Pentagon{a, b, c, d, e});
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<Pentagon> find_pentagons(const OrthoGraph &g) {
    std::vector<Pentagon> out;
    five_cycles(g, true, [&](const Pentagon &p) { out.push_back(p); });
    // An induced C5 is determined by its vertex set, so the walk already yields each set once.
    std::sort(out.begin(), out.end());
    return out;
}

size_t count_all_five_cycles(const OrthoGraph &g) {
    size_t count = 0;
    five_cycles(g, false, [&](const Pentagon &) { count++; });
    return count;
}

size_t independence_number(const OrthoGraph &g, size_t max_nodes) {
    size_t n = g.size();
    if (n == 0) {
        return 0;
    }
    // Complement graph; a maximum clique there is a maximum independent set here.
    std::vector<Bits> comp(n, Bits(n));
    for (size_t a = 0; a < n; a++) {
        comp[a] = ~g.adj[a];
        comp[a].reset(a);
    }
    size_t best = 0;
    size_t nodes = 0;
    std::function<void(Bits, size_t)> expand = [&](Bits p, size_t depth) {
        if (++nodes > max_nodes) {
            throw BudgetExceeded("independence_number: search budget of " + std::to_string(max_nodes) +
                                 " nodes exhausted");
        }
        if (p.none()) {
            best = std::max(best, depth);
            return;
        }
        // Greedy colouring of the candidates in the complement; colour count bounds the clique.
        std::vector<size_t> order;
        std::vector<size_t> colour;
        Bits uncoloured = p;
        size_t k = 0;
        while (uncoloured.any()) {
            k++;
            Bits q = uncoloured;
            while (q.any()) {
                size_t v = q.find_first();
                q.reset(v);
                q -= comp[v];
                uncoloured.reset(v);
                order.push_back(v);
                colour.push_back(k);
            }
        }
        for (size_t i = order.size(); i-- > 0;) {
            if (depth + colour[i] <= best) {
                return;
            }
            size_t v = order[i];
            expand(p & comp[v], depth + 1);
            p.reset(v);
        }
    };
    Bits all(n);
    all.set();
    expand(all, 0);
    return best;
}

WitnessReport witness_check(const std::vector<size_t> &vertices, const OrthoGraph &g) {
    WitnessReport r;
    r.vertices = vertices;
    if (vertices.empty()) {
        return r;
    }
    size_t d = g.rays.at(vertices[0]).size();
    CMatrix sigma(d, d);
    for (size_t v : vertices) {
        sigma += projector(g.rays.at(v));
    }
    Eigen::MatrixXcd m(d, d);
    double entry_error = 0;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            ComplexInterval iv = to_complex(sigma(i, j), 80);
            m(i, j) = iv.mid();
            // Interval radius plus the rounding of the midpoint to double.
            double e = iv.radius.to_double() + std::abs(m(i, j)) * 1e-16;
            entry_error += 2 * e * e;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    Eigen::Index top = d - 1;
    double lambda = solver.eigenvalues()(top);
    Eigen::VectorXcd vec = solver.eigenvectors().col(top);
    vec.normalize();
    double residual = (m * vec - lambda * vec).norm();
    r.witness_max = lambda;
    r.error_bound = residual + std::sqrt(entry_error) + 1e-15 * d;
    r.reevaluated = (vec.adjoint() * m * vec)(0, 0).real();
    for (Eigen::Index i = 0; i < vec.size(); i++) {
        r.optimal_state.push_back(vec(i));
    }
    r.alpha = independence_number(induced_subgraph(g, vertices));
    double gap = r.witness_max - (double)r.alpha;
    r.contextual = gap > CONTEXTUALITY_MARGIN;
    r.inconclusive = std::abs(gap) <= CONTEXTUALITY_MARGIN;
    if (vertices.size() == 5) {
        OrthoGraph h = induced_subgraph(g, vertices);
        if (!find_pentagons(h).empty()) {
            r.theta_reference = std::sqrt(5.0);
        }
    }
    return r;
}

PentagonCensus pentagon_census(const OrthoGraph &g, const std::vector<Pentagon> &pentagons) {
    PentagonCensus c;
    for (const auto &p : pentagons) {
        PentagonComposition pc;
        pc.vertices = p;
        for (size_t v : p) {
            if (g.tags.at(v) == Tag::stabilizer) {
                pc.stabilizer++;
            } else if (g.tags.at(v) == Tag::magic) {
                pc.magic++;
                pc.magic_patterns.push_back(amplitude_pattern(g.rays[v]));
                c.magic_patterns[pc.magic_patterns.back()]++;
            }
        }
        c.composition_histogram[{pc.stabilizer, pc.magic}]++;
        c.pentagons.push_back(std::move(pc));
    }
    return c;
}

PentagonCensus pentagon_census(const EigenReport &report) {
    OrthoGraph g = build_graph(report);
    return pentagon_census(g, find_pentagons(g));
}

std::string to_dot(const OrthoGraph &g, const std::string &name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [label=\"\", fontsize=8];\n";
    for (size_t v = 0; v < g.size(); v++) {
        out << "  v" << v << " [xlabel=\"" << vector_str(g.rays[v]) << "\"";
        switch (g.tags[v]) {
            case Tag::stabilizer:
                out << ", shape=circle, style=filled, fillcolor=black, width=0.25";
                break;
            case Tag::magic:
                out << ", shape=circle, style=filled, fillcolor=black, width=0.08";
                break;
            case Tag::unclassified:
                out << ", shape=circle, width=0.12";
                break;
        }
        out << ", tag=\"" << tag_name(g.tags[v]) << "\"];\n";
    }
    for (size_t a = 0; a < g.size(); a++) {
        for (size_t b = g.adj[a].find_next(a); b != Bits::npos; b = g.adj[a].find_next(b)) {
            out << "  v" << a << " -- v" << b << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace permagic
