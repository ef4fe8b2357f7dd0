#ifndef _PERMAGIC_RAY_H
#define _PERMAGIC_RAY_H

#include <string>
#include <vector>

#include "permagic/matrix.h"

namespace permagic {

/// Scales v so that its first nonzero amplitude is 1. Throws std::invalid_argument on zero.
CVector canonical_ray(const CVector &v);
/// Projective identity of a vector: string form of its canonical amplitudes.
std::string ray_key(const CVector &v);
/// "(a1,a2,...)" from the amplitudes as given.
std::string vector_str(const CVector &v);
/// Every amplitude is 0, 1 or -1.
bool has_unit_entries(const CVector &v);
/// |v><v| / <v|v>.
CMatrix projector(const CVector &v);
/// Sorted multiset of amplitude strings, e.g. "{-1,0,1}". Used to group rays by type.
std::string amplitude_pattern(const CVector &v);

}  // namespace permagic

#endif
