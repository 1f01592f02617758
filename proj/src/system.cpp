// system.cpp: Geometry validation

#include "nanogp/system.hpp"

#include <cmath>

#include "nanogp/errors.hpp"

namespace nanogp {

void validate_geometry(const SphereSystem& s) {
    if (!(s.radius > 0.0) || !std::isfinite(s.radius)) {
        throw GeometryError("sphere radius must be finite and > 0");
    }
    if (!(s.atom_distance > s.radius) || !std::isfinite(s.atom_distance)) {
        throw GeometryError("atom distance r_a must exceed the sphere radius");
    }
}

} // namespace nanogp
