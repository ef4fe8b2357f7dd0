#ifndef _PERMAGIC_SERIALIZE_H
#define _PERMAGIC_SERIALIZE_H

#include "json.hpp"
#include "permagic/cyclo.h"

namespace permagic {

/// {"conductor": N, "coeffs": ["p/q", ...]} on the canonical power basis.
nlohmann::json cyclo_to_json(const Cyclotomic &x);
/// Inverse of cyclo_to_json. Throws std::invalid_argument on malformed input.
Cyclotomic cyclo_from_json(const nlohmann::json &j);

}  // namespace permagic

#endif
