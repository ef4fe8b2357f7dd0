#include "permagic/ray.h"

#include <algorithm>
#include <stdexcept>

namespace permagic {

CVector canonical_ray(const CVector &v) {
    for (size_t k = 0; k < v.size(); k++) {
        if (v[k].is_zero()) {
            continue;
        }
        if (v[k] == Cyclotomic(1)) {
            CVector out(v.size());
            for (size_t t = 0; t < v.size(); t++) {
                out[t] = v[t].canonical();
            }
            return out;
        }
        Cyclotomic inv = v[k].inverse();
        CVector out(v.size());
        for (size_t t = k; t < v.size(); t++) {
            if (!v[t].is_zero()) {
                out[t] = (v[t] * inv).canonical();
            }
        }
        return out;
    }
    throw std::invalid_argument("the zero vector is not a ray");
}

std::string vector_str(const CVector &v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); k++) {
        if (k) {
            s += ",";
        }
        s += v[k].str();
    }
    return s + ")";
}

std::string ray_key(const CVector &v) {
    return vector_str(canonical_ray(v));
}

bool has_unit_entries(const CVector &v) {
    for (const auto &x : v) {
        if (!x.is_zero() && x != Cyclotomic(1) && x != Cyclotomic(-1)) {
            return false;
        }
    }
    return true;
}

CMatrix projector(const CVector &v) {
    Cyclotomic norm = inner(v, v);
    if (norm.is_zero()) {
        throw std::invalid_argument("cannot project onto the zero vector");
    }
    return outer(v, v).scaled(norm.inverse());
}

std::string amplitude_pattern(const CVector &v) {
    std::vector<std::string> parts;
    for (const auto &x : v) {
        parts.push_back(x.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "{";
    for (size_t k = 0; k < parts.size(); k++) {
        if (k) {
            s += ",";
        }
        s += parts[k];
    }
    return s + "}";
}

}  // namespace permagic
