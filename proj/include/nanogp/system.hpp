// system.hpp: Sphere, atom and bath parameters shared across modules

#pragma once

#include "nanogp/material.hpp"

namespace nanogp {

struct ThermalState {
    double T0{0.0};  // environment, K
    double T1{0.0};  // sphere, K
};

// Radially oriented two-level atom.
struct AtomParams {
    double omega0{0.0};  // transition frequency, rad/s
    double gamma0{0.0};  // vacuum spontaneous emission rate at omega0, rad/s
    double theta0{0.0};  // initial Bloch polar angle, rad
};

struct SphereSystem {
    material::PermittivityModel material;
    double radius{0.0};         // a, m
    double atom_distance{0.0};  // r_a from the sphere centre, m
    ThermalState temperatures;
    AtomParams atom;
};

// GeometryError unless 0 < a < r_a (both finite).
void validate_geometry(const SphereSystem& s);

} // namespace nanogp
