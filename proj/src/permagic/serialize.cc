#include "permagic/serialize.h"

namespace permagic {

nlohmann::json cyclo_to_json(const Cyclotomic &x) {
    Cyclotomic c = x.canonical();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &q : c.coeffs()) {
        coeffs.push_back(q.get_str());
    }
    return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclo_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw std::invalid_argument("cyclotomic JSON needs conductor and coeffs");
    }
    int64_t n = j["conductor"].get<int64_t>();
    if (n < 1 || n > MAX_CONDUCTOR) {
        throw std::invalid_argument("cyclotomic JSON conductor out of range");
    }
    const auto &coeffs = j["coeffs"];
    if ((int64_t)coeffs.size() > n) {
        throw std::invalid_argument("cyclotomic JSON has more coefficients than the conductor");
    }
    std::vector<mpq_class> ring(n);
    for (size_t e = 0; e < coeffs.size(); e++) {
        mpq_class q;
        if (!coeffs[e].is_string() || q.set_str(coeffs[e].get<std::string>(), 10) != 0 || q.get_den() == 0) {
            throw std::invalid_argument("bad rational in cyclotomic JSON: " + coeffs[e].dump());
        }
        q.canonicalize();
        ring[e] = q;
    }
    return Cyclotomic::from_exponents(n, ring);
}

}  // namespace permagic
