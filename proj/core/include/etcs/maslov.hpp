#pragma once

#include <optional>
#include <vector>

#include "etcs/angle.hpp"
#include "etcs/matrix.hpp"
#include "etcs/surd.hpp"

namespace etcs {

using SurdMat = Mat<Surd>;

// Two Lagrangian subspaces of a symplectic vector space, given by column
// bases. gamma is a metric-compatible complex structure; the symplectic
// pairing is omega(x, y) = <gamma x, y>.
struct LagrangianPair {
    SurdMat metric;
    SurdMat gamma;
    SurdMat basis_plus;
    SurdMat basis_minus;
};

void validate_lagrangian_pair(const LagrangianPair& pair);

// Angles between the pair: one entry per plane of the rotation
// R = -A+ A- (A the reflection in a subspace), dim/2 entries in total.
// A plane rotating by theta against gamma's orientation contributes +theta,
// one rotating with it contributes -theta; the intersection contributes pi
// per common dimension. value = -sum_{phi != pi} phi/pi when every needed
// angle is a rational multiple of pi, absent otherwise.
struct MaslovResult {
    std::vector<ExactAngle> angle_list;
    size_t intersection_dim = 0;
    std::optional<Rat> value;
};

MaslovResult maslov_angle(const LagrangianPair& pair);

// rho = pi - 2 theta stored as a fraction of pi together with its sign.
struct Rho {
    Rat over_pi;
    int sign = 0;
};

Rho rho_from_theta(const Rat& theta_over_pi);

// Eigenvalue count of the boundary contribution on the negative side:
// sign(rho) * (#{alpha in {pi - |rho|, pi}} - 1 + 2 #{alpha in (pi - |rho|, pi)}),
// zero when rho is. Only positive angles can land in the membership sets.
Int m_rho(const Rho& rho, const std::vector<ExactAngle>& alpha_minus);

// The closed form for the rotation-number sum of the gluing line over both
// angle multisets; agrees with -16 rho/pi + m_rho exactly when alpha+ is the
// matching multiset {0, 2 theta, -2 theta}.
Rat m_h3_formula(const Rho& rho, const std::vector<ExactAngle>& alpha_plus,
                 const std::vector<ExactAngle>& alpha_minus);

// The model pair on the 4-dimensional kernel slice: L- is spanned by the
// section and one coordinate direction, L+ by the section and the theta-tilted
// direction. maslov_angle of this pair has value (pi - 2 theta)/pi. Only
// angles theta = p pi/q with q dividing 12 keep the entries inside the
// rational-surd field.
LagrangianPair kernel_example_pair(const Rat& theta_over_pi);

} // namespace etcs
