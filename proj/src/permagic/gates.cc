#include "permagic/gates.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "permagic/cliques.h"

namespace permagic {

Permutation::Permutation(std::vector<uint8_t> imgs) : images(std::move(imgs)) {
    if (images.size() > MAX_DEGREE) {
        throw std::invalid_argument("permutation degree above " + std::to_string(MAX_DEGREE));
    }
    std::vector<bool> seen(images.size(), false);
    for (uint8_t x : images) {
        if (x >= images.size() || seen[x]) {
            throw std::invalid_argument("images do not form a bijection");
        }
        seen[x] = true;
    }
}

Permutation Permutation::identity(size_t degree) {
    std::vector<uint8_t> v(degree);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation &b) const {
    if (degree() != b.degree()) {
        throw DegreeMismatch("composing permutations of different degree");
    }
    Permutation r;
    r.images.resize(degree());
    for (size_t j = 0; j < degree(); j++) {
        r.images[j] = images[b.images[j]];
    }
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(degree());
    for (size_t j = 0; j < degree(); j++) {
        r.images[images[j]] = (uint8_t)j;
    }
    return r;
}

Permutation Permutation::pow(int64_t k) const {
    size_t n = order();
    int64_t e = ((k % (int64_t)n) + (int64_t)n) % (int64_t)n;
    Permutation r = identity(degree());
    for (int64_t t = 0; t < e; t++) {
        r = *this * r;
    }
    return r;
}

bool Permutation::is_identity() const {
    for (size_t j = 0; j < degree(); j++) {
        if (images[j] != j) {
            return false;
        }
    }
    return true;
}

size_t Permutation::fixed_points() const {
    size_t n = 0;
    for (size_t j = 0; j < degree(); j++) {
        n += images[j] == j;
    }
    return n;
}

size_t Permutation::order() const {
    size_t r = 1;
    for (size_t len : cycle_type()) {
        r = std::lcm(r, len);
    }
    return r;
}

std::vector<size_t> Permutation::cycle_type() const {
    std::vector<size_t> lens;
    std::vector<bool> seen(degree(), false);
    for (size_t j = 0; j < degree(); j++) {
        if (seen[j]) {
            continue;
        }
        size_t len = 0;
        for (size_t k = j; !seen[k]; k = images[k]) {
            seen[k] = true;
            len++;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::string Permutation::one_line() const {
    std::string s = "(";
    for (size_t j = 0; j < degree(); j++) {
        if (j) {
            s += ",";
        }
        s += std::to_string(images[j] + 1);
    }
    return s + ")";
}

std::string Permutation::cycles() const {
    std::string s;
    std::vector<bool> seen(degree(), false);
    for (size_t j = 0; j < degree(); j++) {
        if (seen[j] || images[j] == j) {
            continue;
        }
        s += "(";
        for (size_t k = j; !seen[k]; k = images[k]) {
            seen[k] = true;
            if (k != j) {
                s += ",";
            }
            s += std::to_string(k + 1);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

size_t PermutationHash::operator()(const Permutation &p) const {
    uint64_t h = 0;
    for (uint8_t x : p.images) {
        h = h * 16 + x;
    }
    return std::hash<uint64_t>()(h);
}

namespace {

std::vector<int> parse_ints(const std::string &text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text) {
        if (std::isdigit((unsigned char)c)) {
            cur += c;
        } else {
            if (!cur.empty()) {
                out.push_back(std::stoi(cur));
                cur.clear();
            }
            if (!(c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']' || c == '\t')) {
                throw std::invalid_argument(std::string("unexpected character '") + c + "' in permutation");
            }
        }
    }
    if (!cur.empty()) {
        out.push_back(std::stoi(cur));
    }
    return out;
}

}  // namespace

Permutation parse_permutation(const std::string &text, PermNotation notation, size_t degree) {
    if (notation == PermNotation::one_line) {
        std::vector<int> ints = parse_ints(text);
        if (degree != 0 && ints.size() != degree) {
            throw DegreeMismatch("expected " + std::to_string(degree) + " images in '" + text + "'");
        }
        std::vector<uint8_t> imgs;
        for (int x : ints) {
            if (x < 1 || x > (int)ints.size()) {
                throw std::invalid_argument("image out of range in '" + text + "'");
            }
            imgs.push_back((uint8_t)(x - 1));
        }
        return Permutation(std::move(imgs));
    }
    // Cycle notation: split on ')' to get the individual cycles.
    std::vector<std::vector<int>> cycles;
    size_t max_point = 0;
    size_t pos = 0;
    while (true) {
        size_t open = text.find('(', pos);
        if (open == std::string::npos) {
            break;
        }
        size_t close = text.find(')', open);
        if (close == std::string::npos) {
            throw std::invalid_argument("unbalanced parentheses in '" + text + "'");
        }
        std::vector<int> c = parse_ints(text.substr(open + 1, close - open - 1));
        for (int x : c) {
            if (x < 1) {
                throw std::invalid_argument("points are 1-based in '" + text + "'");
            }
            max_point = std::max(max_point, (size_t)x);
        }
        cycles.push_back(std::move(c));
        pos = close + 1;
    }
    size_t n = degree == 0 ? max_point : degree;
    if (max_point > n) {
        throw DegreeMismatch("cycle point beyond degree in '" + text + "'");
    }
    std::vector<uint8_t> imgs(n);
    std::iota(imgs.begin(), imgs.end(), 0);
    std::vector<bool> used(n, false);
    for (const auto &c : cycles) {
        for (size_t k = 0; k < c.size(); k++) {
            size_t from = c[k] - 1;
            if (used[from]) {
                throw std::invalid_argument("cycles are not disjoint in '" + text + "'");
            }
            used[from] = true;
            imgs[from] = (uint8_t)(c[(k + 1) % c.size()] - 1);
        }
    }
    return Permutation(std::move(imgs));
}

std::vector<Permutation> parse_generators(const std::string &text, PermNotation notation, size_t degree) {
    std::vector<Permutation> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        out.push_back(parse_permutation(item, notation, degree));
        if (degree == 0) {
            degree = out.back().degree();
        } else if (out.back().degree() != degree) {
            throw DegreeMismatch("generators have different degrees");
        }
    }
    return out;
}

CMatrix gate_matrix(const Permutation &p) {
    CMatrix m(p.degree(), p.degree());
    for (size_t j = 0; j < p.degree(); j++) {
        m(p(j), j) = 1;
    }
    return m;
}

bool is_magic(const Permutation &p) {
    return p.fixed_points() == 1;
}

int64_t GateGroup::index_of(const Permutation &p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) {
        return -1;
    }
    return it - elements.begin();
}

bool GateGroup::is_abelian() const {
    for (size_t a = 0; a < generators.size(); a++) {
        for (size_t b = a + 1; b < generators.size(); b++) {
            if (generators[a] * generators[b] != generators[b] * generators[a]) {
                return false;
            }
        }
    }
    return true;
}

OrderCapExceeded::OrderCapExceeded(size_t partial)
    : std::runtime_error("group order exceeds cap (reached " + std::to_string(partial) + " elements)"),
      partial_count(partial) {
}

namespace {

// Fixed-size permutation packed into 4 bits per point for fast hashing in searches.
using Packed = uint64_t;
using Arr = std::array<uint8_t, MAX_DEGREE>;

Packed pack(const Arr &a, size_t d) {
    Packed h = 0;
    for (size_t j = 0; j < d; j++) {
        h |= (Packed)a[j] << (4 * j);
    }
    return h;
}

Arr unpack(Packed h, size_t d) {
    Arr a{};
    for (size_t j = 0; j < d; j++) {
        a[j] = (h >> (4 * j)) & 15;
    }
    return a;
}

Arr to_arr(const Permutation &p) {
    Arr a{};
    for (size_t j = 0; j < p.degree(); j++) {
        a[j] = p(j);
    }
    return a;
}

Permutation from_arr(const Arr &a, size_t d) {
    return Permutation(std::vector<uint8_t>(a.begin(), a.begin() + d));
}

Arr compose(const Arr &a, const Arr &b, size_t d) {
    Arr r{};
    for (size_t j = 0; j < d; j++) {
        r[j] = a[b[j]];
    }
    return r;
}

Arr invert(const Arr &a, size_t d) {
    Arr r{};
    for (size_t j = 0; j < d; j++) {
        r[a[j]] = (uint8_t)j;
    }
    return r;
}

// Returns false if the cap is exceeded.
bool close_packed(const std::vector<Arr> &gens, size_t d, size_t cap, std::vector<Packed> *out) {
    Arr id{};
    for (size_t j = 0; j < d; j++) {
        id[j] = (uint8_t)j;
    }
    std::unordered_set<Packed> seen;
    seen.reserve(std::min<size_t>(cap, 4096) * 2);
    std::vector<Arr> frontier{id};
    seen.insert(pack(id, d));
    out->clear();
    out->push_back(pack(id, d));
    while (!frontier.empty()) {
        std::vector<Arr> next;
        for (const auto &g : frontier) {
            for (const auto &h : gens) {
                Arr x = compose(g, h, d);
                Packed k = pack(x, d);
                if (seen.insert(k).second) {
                    if (seen.size() > cap) {
                        return false;
                    }
                    out->push_back(k);
                    next.push_back(x);
                }
            }
        }
        frontier = std::move(next);
    }
    return true;
}

}  // namespace

GateGroup close_group(const std::vector<Permutation> &generators, size_t order_cap) {
    if (order_cap < 1) {
        throw std::invalid_argument("order_cap must be at least 1");
    }
    if (generators.empty()) {
        throw std::invalid_argument("close_group needs at least one generator");
    }
    size_t d = generators[0].degree();
    std::vector<Arr> gens;
    for (const auto &g : generators) {
        if (g.degree() != d) {
            throw DegreeMismatch("generators have different degrees");
        }
        gens.push_back(to_arr(g));
    }
    std::vector<Packed> packed;
    if (!close_packed(gens, d, order_cap, &packed)) {
        throw OrderCapExceeded(order_cap + 1);
    }
    GateGroup g;
    g.generators = generators;
    for (Packed k : packed) {
        g.elements.push_back(from_arr(unpack(k, d), d));
    }
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

std::string Signature::str() const {
    std::string s = "order " + std::to_string(order) + " {";
    bool first = true;
    for (const auto &[o, n] : element_orders) {
        if (!first) {
            s += ", ";
        }
        first = false;
        s += std::to_string(o) + ":" + std::to_string(n);
    }
    s += "}";
    s += abelian ? " abelian" : " nonabelian";
    return s;
}

bool Signature::operator<(const Signature &o) const {
    if (order != o.order) {
        return order < o.order;
    }
    if (element_orders != o.element_orders) {
        return element_orders < o.element_orders;
    }
    return abelian < o.abelian;
}

Signature group_signature(const GateGroup &g) {
    Signature s;
    s.order = g.order();
    for (const auto &e : g.elements) {
        s.element_orders[e.order()]++;
    }
    s.abelian = g.is_abelian();
    return s;
}

namespace {

// Small finite field F_{p^k} with elements encoded as integers 0..q-1 (base-p digits),
// multiplication by a primitive polynomial. Only used to build the affine reference groups.
struct SmallField {
    int p, k, q;
    std::vector<int> poly;  // x^k = -sum poly[i] x^i... stored as reduction coefficients
    std::vector<std::vector<int>> mul;

    SmallField(int p_, int k_, std::vector<int> reduction) : p(p_), k(k_), poly(std::move(reduction)) {
        q = 1;
        for (int t = 0; t < k; t++) {
            q *= p;
        }
        mul.assign(q, std::vector<int>(q, 0));
        for (int a = 0; a < q; a++) {
            for (int b = 0; b < q; b++) {
                std::vector<int> da = digits(a), db = digits(b), prod(2 * k, 0);
                for (int i = 0; i < k; i++) {
                    for (int j = 0; j < k; j++) {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // x^k = poly[0] + poly[1] x + ... (coefficients of the reduction)
                for (int t = 2 * k - 1; t >= k; t--) {
                    int c = prod[t];
                    prod[t] = 0;
                    for (int i = 0; i < k; i++) {
                        prod[t - k + i] = (prod[t - k + i] + c * poly[i]) % p;
                    }
                }
                mul[a][b] = encode(prod);
            }
        }
    }
    std::vector<int> digits(int a) const {
        std::vector<int> d(k);
        for (int i = 0; i < k; i++) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    int encode(const std::vector<int> &d) const {
        int a = 0;
        for (int i = k - 1; i >= 0; i--) {
            a = a * p + d[i];
        }
        return a;
    }
    int add(int a, int b) const {
        std::vector<int> da = digits(a), db = digits(b);
        for (int i = 0; i < k; i++) {
            da[i] = (da[i] + db[i]) % p;
        }
        return encode(da);
    }
    int power(int a, int e) const {
        int r = 1;
        for (int t = 0; t < e; t++) {
            r = mul[r][a];
        }
        return r;
    }
};

Permutation affine_map(const SmallField &f, int a, int b, int frobenius_power) {
    std::vector<uint8_t> imgs(f.q);
    for (int x = 0; x < f.q; x++) {
        int y = f.power(x, 1);
        for (int t = 0; t < frobenius_power; t++) {
            y = f.power(y, f.p);
        }
        imgs[x] = (uint8_t)f.add(f.mul[a][y], b);
    }
    return Permutation(std::move(imgs));
}

std::vector<Permutation> all_permutations(size_t d, bool even_only) {
    std::vector<Permutation> out;
    std::vector<uint8_t> v(d);
    std::iota(v.begin(), v.end(), 0);
    do {
        Permutation p(v);
        if (even_only) {
            size_t cycles = p.cycle_type().size();
            if ((d - cycles) % 2 != 0) {
                continue;
            }
        }
        out.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

GateGroup group_from_elements(std::vector<Permutation> elems, std::vector<Permutation> gens) {
    GateGroup g;
    std::sort(elems.begin(), elems.end());
    g.elements = std::move(elems);
    g.generators = std::move(gens);
    return g;
}

// Reference constructions for the signature table.
GateGroup reference_group(const std::string &name) {
    if (name == "S3") {
        auto e = all_permutations(3, false);
        return group_from_elements(e, e);
    }
    if (name == "A4") {
        auto e = all_permutations(4, true);
        return group_from_elements(e, e);
    }
    if (name == "S5") {
        auto e = all_permutations(5, false);
        return group_from_elements(e, e);
    }
    if (name == "A5") {
        auto e = all_permutations(5, true);
        return group_from_elements(e, e);
    }
    if (name == "A6") {
        auto e = all_permutations(6, true);
        return group_from_elements(e, e);
    }
    if (name == "Z5:Z4" || name == "Z7:Z6") {
        int p = name == "Z5:Z4" ? 5 : 7;
        SmallField f(p, 1, {0});
        std::vector<Permutation> gens;
        for (int a = 1; a < p; a++) {
            for (int b = 0; b < p; b++) {
                gens.push_back(affine_map(f, a, b, 0));
            }
        }
        return close_group(gens, 10000);
    }
    if (name == "PSL(2,7)") {
        // GL(3,2) acting on the seven nonzero vectors of F_2^3.
        std::vector<Permutation> gens;
        for (int m = 0; m < 512; m++) {
            std::vector<uint8_t> imgs(7);
            std::vector<bool> hit(8, false);
            bool ok = true;
            for (int v = 1; v <= 7 && ok; v++) {
                int w = 0;
                for (int r = 0; r < 3; r++) {
                    int row = (m >> (3 * r)) & 7;
                    w |= (__builtin_popcount(row & v) & 1) << r;
                }
                if (w == 0 || hit[w]) {
                    ok = false;
                } else {
                    hit[w] = true;
                    imgs[v - 1] = (uint8_t)(w - 1);
                }
            }
            if (ok) {
                gens.emplace_back(imgs);
            }
        }
        return close_group(gens, 10000);
    }
    if (name == "Z2^3:Z7") {
        SmallField f(2, 3, {1, 1, 0});  // x^3 = x + 1
        std::vector<Permutation> gens;
        for (int a = 1; a < 8; a++) {
            for (int b = 0; b < 8; b++) {
                gens.push_back(affine_map(f, a, b, 0));
            }
        }
        return close_group(gens, 10000);
    }
    if (name == "Z3^2:Z4" || name == "Z3^2:Z8" || name == "G144") {
        SmallField f(3, 2, {1, 2});  // x^2 = 2x + 1, x primitive of order 8
        std::vector<Permutation> gens;
        int step = name == "Z3^2:Z4" ? 2 : 1;
        for (int e = 0; e < 8; e += step) {
            int a = f.power(3, e);  // encoded element 3 is x
            for (int b = 0; b < 9; b++) {
                gens.push_back(affine_map(f, a, b, 0));
                if (name == "G144") {
                    gens.push_back(affine_map(f, a, b, 1));
                }
            }
        }
        return close_group(gens, 10000);
    }
    throw std::out_of_range("no reference construction for " + name);
}

}  // namespace

const std::vector<std::pair<std::string, Signature>> &named_signatures() {
    static const std::vector<std::pair<std::string, Signature>> table = [] {
        std::vector<std::pair<std::string, Signature>> t;
        for (const char *name :
             {"S3", "A4", "Z5:Z4", "Z7:Z6", "Z3^2:Z4", "Z2^3:Z7", "A5", "Z3^2:Z8", "S5", "G144", "PSL(2,7)", "A6"}) {
            GateGroup g = reference_group(name);
            Signature s = group_signature(g);
            s.abelian = false;
            t.emplace_back(name, s);
        }
        return t;
    }();
    return table;
}

std::string signature_name(const Signature &s) {
    for (const auto &[name, sig] : named_signatures()) {
        if (sig.order == s.order && sig.element_orders == s.element_orders) {
            return name;
        }
    }
    return "";
}

std::vector<std::vector<size_t>> commuting_cliques(const GateGroup &g, size_t min_size, bool maximum_only) {
    // Vertices: non-identity elements; elements[0] is the identity.
    size_t n = g.order() > 0 ? g.order() - 1 : 0;
    std::vector<Bits> adj(n, Bits(n));
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            const Permutation &x = g.elements[a + 1];
            const Permutation &y = g.elements[b + 1];
            if (x * y == y * x) {
                adj[a].set(b);
                adj[b].set(a);
            }
        }
    }
    std::vector<std::vector<size_t>> out;
    size_t largest = 0;
    for (auto &c : maximal_cliques(adj)) {
        if (c.size() < min_size) {
            continue;
        }
        for (size_t &v : c) {
            v += 1;
        }
        largest = std::max(largest, c.size());
        out.push_back(std::move(c));
    }
    if (maximum_only) {
        std::erase_if(out, [&](const auto &c) { return c.size() != largest; });
    }
    return out;
}

namespace {

struct PairPredicate {
    bool magic_only;
    bool allow_cyclic;

    bool element_ok(const Arr &a, size_t d) const {
        size_t fixed = 0;
        bool identity = true;
        for (size_t j = 0; j < d; j++) {
            fixed += a[j] == j;
            identity &= a[j] == j;
        }
        return magic_only ? fixed == 1 : !identity;
    }
};

std::vector<Packed> cyclic_closure(const Arr &a, size_t d) {
    std::vector<Packed> out;
    Arr x = a;
    Packed start = pack(a, d);
    do {
        out.push_back(pack(x, d));
        x = compose(a, x, d);
    } while (pack(x, d) != start);
    std::sort(out.begin(), out.end());
    return out;
}

bool pair_ok(const PairPredicate &pred, const Arr &a, const Arr &b, size_t d) {
    Packed pa = pack(a, d), pb = pack(b, d);
    if (pa == pb || !pred.element_ok(a, d) || !pred.element_ok(b, d)) {
        return false;
    }
    if (!pred.allow_cyclic) {
        auto ca = cyclic_closure(a, d);
        auto cb = cyclic_closure(b, d);
        if (std::binary_search(ca.begin(), ca.end(), pb) || std::binary_search(cb.begin(), cb.end(), pa)) {
            return false;
        }
    }
    return true;
}

// Try to extend s (partial map, 255 = unassigned) so that s a s^-1 = x and s b s^-1 = y.
bool extend_conjugator(const Arr &a, const Arr &b, const Arr &x, const Arr &y, size_t d, Arr &s, Arr &sinv) {
    size_t seed = d;
    for (size_t j = 0; j < d; j++) {
        if (s[j] == 255) {
            seed = j;
            break;
        }
    }
    if (seed == d) {
        return true;
    }
    for (size_t t = 0; t < d; t++) {
        if (sinv[t] != 255) {
            continue;
        }
        Arr s2 = s, sinv2 = sinv;
        std::vector<std::pair<size_t, size_t>> queue{{seed, t}};
        bool ok = true;
        while (!queue.empty() && ok) {
            auto [i, ti] = queue.back();
            queue.pop_back();
            if (s2[i] != 255) {
                ok = s2[i] == ti;
                continue;
            }
            if (sinv2[ti] != 255) {
                ok = false;
                continue;
            }
            s2[i] = (uint8_t)ti;
            sinv2[ti] = (uint8_t)i;
            queue.emplace_back(a[i], x[ti]);
            queue.emplace_back(b[i], y[ti]);
        }
        if (ok && extend_conjugator(a, b, x, y, d, s2, sinv2)) {
            s = s2;
            sinv = sinv2;
            return true;
        }
    }
    return false;
}

bool conjugate_pair(const Arr &a, const Arr &b, const Arr &x, const Arr &y, size_t d, Arr *out) {
    Arr s, sinv;
    s.fill(255);
    sinv.fill(255);
    if (!extend_conjugator(a, b, x, y, d, s, sinv)) {
        return false;
    }
    *out = s;
    return true;
}

std::vector<size_t> cycle_type_arr(const Arr &a, size_t d) {
    return from_arr(a, d).cycle_type();
}

// Normalizer and centralizer sizes of G inside S_d, by brute force over S_d.
void normalizer_and_centralizer(const GateGroup &g, size_t *norm, size_t *cent) {
    size_t d = g.degree();
    std::unordered_set<Packed> elems;
    for (const auto &e : g.elements) {
        elems.insert(pack(to_arr(e), d));
    }
    std::vector<Arr> gens;
    for (const auto &e : g.generators) {
        gens.push_back(to_arr(e));
    }
    *norm = 0;
    *cent = 0;
    Arr s{};
    for (size_t j = 0; j < d; j++) {
        s[j] = (uint8_t)j;
    }
    do {
        Arr sinv = invert(s, d);
        bool normalizes = true, centralizes = true;
        for (const auto &h : gens) {
            Arr c = compose(compose(s, h, d), sinv, d);
            if (!elems.count(pack(c, d))) {
                normalizes = false;
                centralizes = false;
                break;
            }
            if (c != h) {
                centralizes = false;
            }
        }
        *norm += normalizes;
        *cent += centralizes;
    } while (std::next_permutation(s.begin(), s.begin() + d));
}

}  // namespace

bool find_conjugator(const GateGroup &g, const GateGroup &h, Permutation *out) {
    if (g.order() != h.order() || g.degree() != h.degree()) {
        return false;
    }
    size_t d = g.degree();
    if (g.generators.empty()) {
        *out = Permutation::identity(d);
        return true;
    }
    std::vector<Arr> gens;
    for (const auto &e : g.generators) {
        gens.push_back(to_arr(e));
    }
    // Two-generator groups are the only ones the search produces; reduce longer lists to a
    // pair only when it still generates.
    Arr a = gens[0];
    Arr b = gens.size() > 1 ? gens[1] : gens[0];
    if (gens.size() > 2) {
        std::vector<Packed> tmp;
        close_packed({a, b}, d, g.order(), &tmp);
        if (tmp.size() != g.order()) {
            throw std::invalid_argument("find_conjugator needs a group generated by its first two generators");
        }
    }
    auto ta = cycle_type_arr(a, d), tb = cycle_type_arr(b, d);
    std::vector<Arr> xs, ys;
    for (const auto &e : h.elements) {
        Arr ea = to_arr(e);
        auto te = e.cycle_type();
        if (te == ta) {
            xs.push_back(ea);
        }
        if (te == tb) {
            ys.push_back(ea);
        }
    }
    for (const auto &x : xs) {
        for (const auto &y : ys) {
            Arr s;
            if (conjugate_pair(a, b, x, y, d, &s)) {
                *out = from_arr(s, d);
                return true;
            }
        }
    }
    return false;
}

MagicPairSearch enumerate_magic_pairs(size_t d, const SearchOptions &options) {
    if (d < 2 || d > MAX_DEGREE) {
        throw std::invalid_argument("search degree must be in [2, 9]");
    }
    auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (options.budget_seconds <= 0) {
            return false;
        }
        std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
        return el.count() > options.budget_seconds;
    };
    PairPredicate pred{!options.any_generators, options.allow_cyclic_pairs};

    std::vector<Arr> pool;
    {
        Arr v{};
        for (size_t j = 0; j < d; j++) {
            v[j] = (uint8_t)j;
        }
        do {
            if (pred.element_ok(v, d)) {
                pool.push_back(v);
            }
        } while (std::next_permutation(v.begin(), v.begin() + d));
    }
    std::map<std::vector<size_t>, Arr> reps;
    for (const auto &p : pool) {
        reps.emplace(cycle_type_arr(p, d), p);
    }

    MagicPairSearch result;
    result.degree = d;
    std::map<std::vector<Packed>, std::pair<Arr, Arr>> found;
    for (const auto &[type, g1] : reps) {
        if (result.budget_exhausted) {
            break;
        }
        std::vector<Arr> centralizer;
        {
            Arr s{};
            for (size_t j = 0; j < d; j++) {
                s[j] = (uint8_t)j;
            }
            do {
                if (compose(s, g1, d) == compose(g1, s, d)) {
                    centralizer.push_back(s);
                }
            } while (std::next_permutation(s.begin(), s.begin() + d));
        }
        std::vector<Arr> cent_inv;
        for (const auto &c : centralizer) {
            cent_inv.push_back(invert(c, d));
        }
        if (options.progress) {
            options.progress("degree " + std::to_string(d) + ": first generator " + from_arr(g1, d).cycles() +
                             ", centralizer order " + std::to_string(centralizer.size()));
        }
        std::vector<Packed> elems;
        for (const auto &g2 : pool) {
            Packed k2 = pack(g2, d);
            bool is_rep = true;
            for (size_t ci = 0; ci < centralizer.size(); ci++) {
                if (pack(compose(compose(centralizer[ci], g2, d), cent_inv[ci], d), d) < k2) {
                    is_rep = false;
                    break;
                }
            }
            if (!is_rep || !pair_ok(pred, g1, g2, d)) {
                continue;
            }
            if ((result.pairs_examined & 255) == 0 && out_of_time()) {
                result.budget_exhausted = true;
                break;
            }
            result.pairs_examined++;
            if (!close_packed({g1, g2}, d, options.order_cap, &elems)) {
                result.skipped_pairs++;
                continue;
            }
            std::sort(elems.begin(), elems.end());
            found.emplace(elems, std::make_pair(g1, g2));
        }
    }

    // Merge element sets into conjugacy classes.
    std::map<Signature, std::vector<FoundGroup>> buckets;
    for (const auto &[elems, gens] : found) {
        GateGroup g;
        g.generators = {from_arr(gens.first, d), from_arr(gens.second, d)};
        for (Packed k : elems) {
            g.elements.push_back(from_arr(unpack(k, d), d));
        }
        std::sort(g.elements.begin(), g.elements.end());
        Signature sig = group_signature(g);
        auto &bucket = buckets[sig];
        bool merged = false;
        for (auto &fg : bucket) {
            Permutation s;
            if (find_conjugator(g, fg.group, &s)) {
                fg.element_sets++;
                merged = true;
                break;
            }
        }
        if (!merged) {
            FoundGroup fg;
            fg.group = std::move(g);
            fg.signature = sig;
            fg.name = signature_name(sig);
            fg.element_sets = 1;
            bucket.push_back(std::move(fg));
        }
    }

    for (auto &[sig, bucket] : buckets) {
        for (auto &fg : bucket) {
            // Orbits of generating pairs under S_d conjugation: every orbit meets this element set
            // in an orbit of the normalizer, whose stabilizer is the centralizer of the group.
            constexpr size_t PAIR_COUNT_LIMIT = 400;
            if (fg.group.order() <= PAIR_COUNT_LIMIT) {
                size_t norm = 0, cent = 0;
                normalizer_and_centralizer(fg.group, &norm, &cent);
                std::vector<Arr> members;
                for (const auto &e : fg.group.elements) {
                    members.push_back(to_arr(e));
                }
                size_t pairs = 0;
                std::vector<Packed> tmp;
                for (const auto &a : members) {
                    for (const auto &b : members) {
                        if (!pair_ok(pred, a, b, d)) {
                            continue;
                        }
                        close_packed({a, b}, d, fg.group.order(), &tmp);
                        pairs += tmp.size() == fg.group.order();
                    }
                }
                fg.pair_orbits = (int64_t)(pairs * cent / norm);
            }
            result.groups.push_back(std::move(fg));
        }
    }
    std::sort(result.groups.begin(), result.groups.end(), [](const FoundGroup &a, const FoundGroup &b) {
        if (a.signature.order != b.signature.order) {
            return a.signature.order < b.signature.order;
        }
        if (!(a.signature == b.signature)) {
            return a.signature < b.signature;
        }
        return a.group.generators < b.group.generators;
    });
    return result;
}

namespace {

struct NamedGenerators {
    const char *name;
    const char *first;
    const char *second;
};

// One-line, 1-based. Each pair consists of two magic gates.
const NamedGenerators NAMED[] = {
    {"S3", "(1,3,2)", "(3,2,1)"},
    {"A4", "(1,3,4,2)", "(3,1,2,4)"},
    {"F20", "(1,3,5,2,4)", "(2,4,1,3,5)"},
    {"S5", "(1,3,2,5,4)", "(4,5,3,2,1)"},
    {"A5", "(1,3,4,5,6,2)", "(2,3,5,4,6,1)"},
    {"A5b", "(1,3,4,5,6,2)", "(1,3,5,6,4,2)"},
    {"A6", "(1,3,4,5,6,2)", "(2,3,4,6,5,1)"},
    {"F42", "(1,3,4,5,6,7,2)", "(2,7,4,6,5,3,1)"},
    {"PSL27", "(1,3,4,2,6,7,5)", "(4,5,3,7,6,2,1)"},
    {"AGL18", "(1,3,4,5,6,7,8,2)", "(2,5,8,3,7,6,4,1)"},
    {"F36", "(1,3,4,5,2,7,8,9,6)", "(8,9,7,4,3,5,6,2,1)"},
    {"F36b", "(1,3,2,5,4,7,8,9,6)", "(1,3,6,5,4,9,8,7,2)"},
    {"AGL19", "(1,3,4,5,6,7,8,9,2)", "(2,5,7,3,6,4,9,8,1)"},
    {"AGammaL19", "(1,3,4,5,2,7,8,9,6)", "(5,4,8,9,7,6,3,2,1)"},
};

}  // namespace

GateGroup named_group(const std::string &name) {
    for (const auto &n : NAMED) {
        if (name == n.name) {
            std::vector<Permutation> gens = {parse_permutation(n.first, PermNotation::one_line),
                                             parse_permutation(n.second, PermNotation::one_line)};
            return close_group(gens, 5000);
        }
    }
    throw std::out_of_range("unknown group '" + name + "'");
}

std::vector<std::string> named_group_names() {
    std::vector<std::string> out;
    for (const auto &n : NAMED) {
        out.push_back(n.name);
    }
    return out;
}

}  // namespace permagic
