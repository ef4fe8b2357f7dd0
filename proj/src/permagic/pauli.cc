#include "permagic/pauli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "json.hpp"
#include "permagic/expr.h"
#include "permagic/ray.h"

namespace permagic {

namespace {
constexpr int STABILIZER_CACHE_SCHEMA = 1;
}

bool is_prime(size_t d) {
    if (d < 2) {
        return false;
    }
    for (size_t p = 2; p * p <= d; p++) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> tensor_factors(size_t d) {
    std::vector<size_t> out;
    for (size_t p = 2; p <= d; p++) {
        while (d % p == 0) {
            out.push_back(p);
            d /= p;
        }
    }
    return out;
}

CMatrix shift_operator(size_t d) {
    CMatrix m(d, d);
    for (size_t j = 0; j < d; j++) {
        m((j + 1) % d, j) = 1;
    }
    return m;
}

CMatrix clock_operator(size_t d) {
    CMatrix m(d, d);
    for (size_t j = 0; j < d; j++) {
        m(j, j) = Cyclotomic::root_of_unity(d, j);
    }
    return m;
}

CMatrix pauli_operator(size_t d, size_t m, size_t j) {
    if (d < 2 || m >= d || j >= d) {
        throw std::invalid_argument("pauli_operator needs 0 <= m, j < d and d >= 2");
    }
    Cyclotomic phase = d == 2 ? Cyclotomic::root_of_unity(4, j * m) : Cyclotomic::root_of_unity(2 * d, -(int64_t)(j * m));
    // Z^m X^j |k> = w^(m (k + j)) |k + j>.
    CMatrix out(d, d);
    for (size_t k = 0; k < d; k++) {
        size_t r = (k + j) % d;
        out(r, k) = phase * Cyclotomic::root_of_unity(d, m * r);
    }
    return out;
}

bool StabilizerSet::contains(const CVector &ray) const {
    if (ray.size() != d) {
        return false;
    }
    return keys.count(ray_key(ray)) > 0;
}

size_t stabilizer_count_formula(size_t d) {
    std::map<size_t, size_t> mult;
    for (size_t p : tensor_factors(d)) {
        mult[p]++;
    }
    size_t total = 1;
    for (auto [p, n] : mult) {
        size_t c = 1;
        for (size_t k = 0; k < n; k++) {
            c *= p;
        }
        size_t pk = 1;
        for (size_t k = 1; k <= n; k++) {
            pk *= p;
            c *= pk + 1;
        }
        total *= c;
    }
    return total;
}

namespace {

using Vec = std::vector<int>;

int symplectic(const Vec &a, const Vec &b, int p) {
    // Coordinates (m1, j1, m2, j2, ...).
    int s = 0;
    for (size_t k = 0; k + 1 < a.size(); k += 2) {
        s += a[k] * b[k + 1] - a[k + 1] * b[k];
    }
    return ((s % p) + p) % p;
}

int inv_mod_p(int a, int p) {
    for (int x = 1; x < p; x++) {
        if (a * x % p == 1) {
            return x;
        }
    }
    throw std::logic_error("no inverse mod p");
}

std::vector<Vec> rref_mod_p(std::vector<Vec> rows, int p) {
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < rows.size(); c++) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        int inv = inv_mod_p(rows[rank][c], p);
        for (auto &x : rows[rank]) {
            x = x * inv % p;
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][c] != 0) {
                int f = rows[r][c];
                for (size_t k = 0; k < ncols; k++) {
                    rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
                }
            }
        }
        rank++;
    }
    rows.resize(rank);
    return rows;
}

// Lagrangian subspaces of F_p^(2n) as RREF bases.
std::vector<std::vector<Vec>> lagrangians(int p, size_t n) {
    size_t dim = 2 * n;
    std::vector<Vec> vecs;
    size_t total = 1;
    for (size_t k = 0; k < dim; k++) {
        total *= p;
    }
    for (size_t code = 1; code < total; code++) {
        Vec v(dim);
        size_t c = code;
        for (size_t k = 0; k < dim; k++) {
            v[k] = c % p;
            c /= p;
        }
        vecs.push_back(v);
    }
    std::set<std::vector<Vec>> found;
    std::vector<Vec> chosen;
    std::function<void(size_t)> grow = [&](size_t start) {
        if (chosen.size() == n) {
            auto basis = rref_mod_p(chosen, p);
            if (basis.size() == n) {
                found.insert(basis);
            }
            return;
        }
        for (size_t i = start; i < vecs.size(); i++) {
            bool ok = true;
            for (const auto &u : chosen) {
                if (symplectic(u, vecs[i], p) != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            chosen.push_back(vecs[i]);
            if (rref_mod_p(chosen, p).size() == chosen.size()) {
                grow(i + 1);
            }
            chosen.pop_back();
        }
    };
    grow(0);
    return {found.begin(), found.end()};
}

CMatrix tensor_pauli(const std::vector<size_t> &factors, const std::vector<std::pair<size_t, size_t>> &labels) {
    CMatrix m = CMatrix::identity(1);
    for (size_t k = 0; k < factors.size(); k++) {
        m = kron(m, pauli_operator(factors[k], labels[k].first, labels[k].second));
    }
    return m;
}

}  // namespace

std::vector<std::vector<LabeledPauli>> maximal_isotropic_generators(size_t d, StabilizerConstruction construction) {
    std::vector<std::vector<LabeledPauli>> out;
    if (construction == StabilizerConstruction::single_qudit || is_prime(d)) {
        // Subgroups of Z_d x Z_d of order d that are isotropic, from all generating pairs.
        std::set<std::vector<int>> seen;
        auto symp = [&](int m1, int j1, int m2, int j2) { return (((m1 * j2 - j1 * m2) % (int)d) + (int)d) % (int)d; };
        for (int a = 0; a < (int)(d * d); a++) {
            for (int b = a; b < (int)(d * d); b++) {
                int m1 = a / d, j1 = a % d, m2 = b / d, j2 = b % d;
                if (symp(m1, j1, m2, j2) != 0) {
                    continue;
                }
                std::vector<int> elems;
                for (size_t s = 0; s < d; s++) {
                    for (size_t t = 0; t < d; t++) {
                        int m = (s * m1 + t * m2) % d, j = (s * j1 + t * j2) % d;
                        elems.push_back(m * d + j);
                    }
                }
                std::sort(elems.begin(), elems.end());
                elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
                if (elems.size() != d || !seen.insert(elems).second) {
                    continue;
                }
                std::vector<LabeledPauli> gens;
                for (int g : {a, b}) {
                    LabeledPauli lp;
                    lp.labels = {{(size_t)(g / d), (size_t)(g % d)}};
                    lp.matrix = pauli_operator(d, g / d, g % d);
                    gens.push_back(std::move(lp));
                }
                out.push_back(std::move(gens));
            }
        }
        return out;
    }
    std::vector<size_t> factors = tensor_factors(d);
    std::map<size_t, std::vector<size_t>> positions;
    for (size_t k = 0; k < factors.size(); k++) {
        positions[factors[k]].push_back(k);
    }
    std::vector<std::vector<std::vector<LabeledPauli>>> per_prime;
    for (const auto &[p, pos] : positions) {
        std::vector<std::vector<LabeledPauli>> options;
        for (const auto &basis : lagrangians((int)p, pos.size())) {
            std::vector<LabeledPauli> gens;
            for (const auto &v : basis) {
                LabeledPauli lp;
                lp.labels.assign(factors.size(), {0, 0});
                for (size_t k = 0; k < pos.size(); k++) {
                    lp.labels[pos[k]] = {(size_t)v[2 * k], (size_t)v[2 * k + 1]};
                }
                lp.matrix = tensor_pauli(factors, lp.labels);
                gens.push_back(std::move(lp));
            }
            options.push_back(std::move(gens));
        }
        per_prime.push_back(std::move(options));
    }
    std::vector<size_t> idx(per_prime.size(), 0);
    while (true) {
        std::vector<LabeledPauli> gens;
        for (size_t k = 0; k < per_prime.size(); k++) {
            for (const auto &g : per_prime[k][idx[k]]) {
                gens.push_back(g);
            }
        }
        out.push_back(std::move(gens));
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == per_prime[k].size()) {
            idx[k] = 0;
            k++;
        }
        if (k == idx.size()) {
            break;
        }
    }
    return out;
}

namespace {

std::shared_ptr<StabilizerSet> compute_stabilizers(size_t d, StabilizerConstruction construction) {
    auto set = std::make_shared<StabilizerSet>();
    set->d = d;
    set->construction = construction;
    size_t order = 1;
    if (construction == StabilizerConstruction::single_qudit || is_prime(d)) {
        order = 2 * d;
    } else {
        for (size_t f : tensor_factors(d)) {
            order = std::lcm(order, 2 * f);
        }
    }
    CVector candidates;
    for (size_t k = 0; k < order; k++) {
        candidates.push_back(Cyclotomic::root_of_unity(order, k));
    }
    std::map<std::string, CVector> rays;
    for (const auto &gens : maximal_isotropic_generators(d, construction)) {
        std::vector<CMatrix> mats;
        std::vector<CVector> cands;
        for (const auto &g : gens) {
            mats.push_back(g.matrix);
            cands.push_back(candidates);
        }
        for (const auto &space : joint_eigenspaces(mats, cands)) {
            if (space.basis.size() != 1) {
                continue;
            }
            CVector r = canonical_ray(space.basis[0]);
            rays.emplace(vector_str(r), std::move(r));
        }
    }
    for (auto &[key, r] : rays) {
        set->keys.insert(key);
        set->rays.push_back(std::move(r));
    }
    return set;
}

std::string construction_name(StabilizerConstruction c) {
    return c == StabilizerConstruction::tensor ? "tensor" : "single_qudit";
}

std::filesystem::path cache_path(size_t d, StabilizerConstruction c) {
    const char *dir = std::getenv("PERMAGIC_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') {
        return {};
    }
    return std::filesystem::path(dir) / ("stabilizers_d" + std::to_string(d) + "_" + construction_name(c) + ".json");
}

std::shared_ptr<StabilizerSet> load_cache(const std::filesystem::path &path, size_t d, StabilizerConstruction c) {
    std::ifstream in(path);
    if (!in) {
        return nullptr;
    }
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("schema").get<int>() != STABILIZER_CACHE_SCHEMA || j.at("d").get<size_t>() != d ||
            j.at("construction").get<std::string>() != construction_name(c)) {
            return nullptr;
        }
        auto set = std::make_shared<StabilizerSet>();
        set->d = d;
        set->construction = c;
        for (const auto &row : j.at("rays")) {
            CVector r;
            for (const auto &amp : row) {
                r.push_back(parse_cyclotomic(amp.get<std::string>()));
            }
            if (r.size() != d) {
                return nullptr;
            }
            r = canonical_ray(r);
            set->keys.insert(vector_str(r));
            set->rays.push_back(std::move(r));
        }
        if (set->keys.size() != set->rays.size() || (size_t)j.at("count").get<size_t>() != set->rays.size()) {
            return nullptr;
        }
        std::sort(set->rays.begin(), set->rays.end(),
                  [](const CVector &a, const CVector &b) { return vector_str(a) < vector_str(b); });
        return set;
    } catch (const std::exception &) {
        return nullptr;
    }
}

void store_cache(const std::filesystem::path &path, const StabilizerSet &set) {
    nlohmann::json rays = nlohmann::json::array();
    for (const auto &r : set.rays) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto &x : r) {
            row.push_back(x.str());
        }
        rays.push_back(row);
    }
    nlohmann::json j = {{"schema", STABILIZER_CACHE_SCHEMA},
                        {"d", set.d},
                        {"construction", construction_name(set.construction)},
                        {"count", set.rays.size()},
                        {"rays", rays}};
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            return;
        }
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace

std::shared_ptr<const StabilizerSet> enumerate_stabilizer_rays(size_t d, StabilizerConstruction construction) {
    if (d < 2 || d > 9) {
        throw std::invalid_argument("stabilizer enumeration supports 2 <= d <= 9");
    }
    static std::mutex mutex;
    static std::map<std::pair<size_t, int>, std::shared_ptr<const StabilizerSet>> memo;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(d, (int)construction);
    auto path = cache_path(d, construction);
    auto it = memo.find(key);
    if (it != memo.end()) {
        // the cache dir may have been set after the first call
        if (!path.empty() && !std::filesystem::exists(path)) {
            store_cache(path, *it->second);
        }
        return it->second;
    }
    std::shared_ptr<StabilizerSet> set;
    if (!path.empty()) {
        set = load_cache(path, d, construction);
    }
    if (!set) {
        set = compute_stabilizers(d, construction);
        if (!path.empty()) {
            store_cache(path, *set);
        }
    }
    memo[key] = set;
    return set;
}

bool is_stabilizer(const CVector &ray, StabilizerConstruction construction) {
    return enumerate_stabilizer_rays(ray.size(), construction)->contains(ray);
}

}  // namespace permagic
