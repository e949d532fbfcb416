#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etcs/rational.hpp"

namespace etcs {

// Topological and structure invariants of one closed 7-manifold with a
// G2-structure. The smooth classification needs b3 and div p1 on a
// 2-connected manifold with torsion-free H4; nu refines it to the structure,
// nu_bar to the metric's moduli component.
struct ManifoldInvariants {
    Int b3{0};
    Int div_p1{1};
    bool h4_torsion_free = true;
    bool two_connected = true;
    Int b1{0};
    std::optional<Rat> nu_bar;
    bool holonomy_exactly_g2 = true;
};

void validate_invariants(const ManifoldInvariants& inv);

enum class VerdictLevel {
    distinct_manifolds,
    almost_diffeomorphic_only,
    diffeomorphic,
    diffeomorphic_distinct_structures,
    diffeomorphic_same_structure_distinct_moduli_components,
    indistinguishable_by_these_invariants,
};

const char* verdict_level_name(VerdictLevel level);

struct ComparisonVerdict {
    VerdictLevel level;
    std::vector<std::string> reasoning;
};

// Smooth comparison by (b3, div p1): unequal pairs give distinct manifolds;
// equal pairs give a diffeomorphism when div p1 is divisible by neither 16
// nor 7, and only an almost-diffeomorphism otherwise. Both records must be
// 2-connected with torsion-free H4.
ComparisonVerdict wilkens_compare(const ManifoldInvariants& a, const ManifoldInvariants& b);

// Number of G2-structure classes up to homotopy and diffeomorphism when nu
// separates them completely: exactly 24 when div p1 divides 224, unknown
// otherwise.
std::optional<int> g2_structure_classes(const ManifoldInvariants& inv);

// Runs the full decision chain: smooth comparison, then nu mod 48, then
// nu_bar. Stops early (with the reasoning explaining what is missing) when an
// input lacks the data for the next stage, and never claims more than the
// invariants prove.
ComparisonVerdict full_verdict(const ManifoldInvariants& a, const ManifoldInvariants& b);

} // namespace etcs
