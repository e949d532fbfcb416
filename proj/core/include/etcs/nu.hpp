#pragma once

#include <optional>

#include "etcs/angles.hpp"
#include "etcs/maslov.hpp"

namespace etcs {

// Full account of one nu_bar evaluation. nu_bar is the sum of the three
// terms; nu_mod_48 is present exactly when nu_bar is an integer.
struct NuReport {
    Rat rho_over_pi;
    Int m_rho_value{0};
    Rat term_halves;
    Rat term_gluing;
    Int term_maslov{0};
    Rat nu_bar;
    std::optional<int> nu_mod_48;
    Int b1{0};
    bool integral = false;
    bool divisible_by_3 = false;
    bool within_bound = false;
    bool conditional_on_halves = false;
};

// nu_bar = nu_bar(+) + nu_bar(-) - 72 rho/pi + 3 m_rho with rho = pi - 2 theta.
// Requires the computed alpha+ to match {0, 2 theta, -2 theta}. The halves
// are provably zero whenever the matching order k is at most 2 and must be
// supplied explicitly otherwise.
NuReport nu_bar(const Configuration& cfg, const Int& b1 = Int(0), const EvalMode& mode = {});

// nu = nu_bar + 24 (1 + b1) mod 48, in [0, 48). A manifold with holonomy
// exactly the exceptional group has b1 = 0; passing holonomy_exactly = true
// with b1 != 0 is rejected.
int nu_mod_48(const Int& nu_bar_value, const Int& b1, bool holonomy_exactly);

// eta(B) = eta(+) + eta(-) - 16 rho/pi + m_rho for the gluing-line operator;
// same preconditions as nu_bar, with the halves' eta invariants supplied.
Rat eta_signature(const Configuration& cfg, const Rat& eta_plus, const Rat& eta_minus,
                  const EvalMode& mode = {});

// Validates the ingredient ranges (|rho| < pi; sign(rho) m_rho in [-1, 18],
// forced by a 19-angle multiset; m_rho = 0 when rho = 0) and reports whether
// -75 < -72 rho/pi + 3 m_rho < 75.
bool bound_check(const Rat& rho_over_pi, const Int& m_rho_value);

} // namespace etcs
