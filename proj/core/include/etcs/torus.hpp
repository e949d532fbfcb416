#pragma once

#include <vector>

#include "etcs/angle.hpp"
#include "etcs/surd.hpp"

namespace etcs {

// One torus factor of a cross-section: the quotient order k and the two side
// lengths. The relevant lattice is spanned by (zeta, 0) and (zeta/k, xi/k).
struct TorusFactor {
    unsigned k = 1;
    Surd zeta;
    Surd xi;
};

void validate_torus_factor(const TorusFactor& t);

struct Vec2 {
    Surd x;
    Surd y;
};

Surd norm2(const Vec2& v);
Surd inner(const Vec2& u, const Vec2& v);
Surd det2(const Vec2& u, const Vec2& v);

// Gauss-reduced basis: |b1| <= |b2|, 2 |<b1, b2>| <= |b1|^2, inner product
// non-negative (orientation positive when the basis is orthogonal).
struct PlanarLattice {
    Vec2 b1;
    Vec2 b2;
};

Int surd_floor(const Surd& s);

PlanarLattice quotient_lattice(const TorusFactor& t);

// All gluing angles theta in (0, pi) whose orientation-reversing isometry
// (-cos theta  sin theta; sin theta  cos theta) maps one quotient lattice onto
// the other, sorted ascending without repeats. Empty when the covolumes
// differ or no reflection matches; an empty answer is a valid answer.
std::vector<ExactAngle> gluing_angles(const TorusFactor& t_plus, const TorusFactor& t_minus);

} // namespace etcs
