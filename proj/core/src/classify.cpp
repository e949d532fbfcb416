#include "etcs/classify.hpp"

#include "etcs/error.hpp"
#include "etcs/nu.hpp"

namespace etcs {

void validate_invariants(const ManifoldInvariants& inv) {
    if (sgn(inv.b3) < 0) fail_input("b3 must be non-negative");
    if (sgn(inv.div_p1) <= 0) fail_input("div p1 must be positive");
    if (sgn(inv.b1) < 0) fail_input("b1 must be non-negative");
    if (inv.two_connected && sgn(inv.b1) != 0) fail_input("a 2-connected manifold has b1 = 0");
    if (inv.holonomy_exactly_g2 && sgn(inv.b1) != 0)
        fail_input("holonomy exactly the exceptional group forces b1 = 0");
}

const char* verdict_level_name(VerdictLevel level) {
    switch (level) {
    case VerdictLevel::distinct_manifolds: return "distinct_manifolds";
    case VerdictLevel::almost_diffeomorphic_only: return "almost_diffeomorphic_only";
    case VerdictLevel::diffeomorphic: return "diffeomorphic";
    case VerdictLevel::diffeomorphic_distinct_structures: return "diffeomorphic_distinct_structures";
    case VerdictLevel::diffeomorphic_same_structure_distinct_moduli_components:
        return "diffeomorphic_same_structure_distinct_moduli_components";
    case VerdictLevel::indistinguishable_by_these_invariants:
        return "indistinguishable_by_these_invariants";
    }
    return "?";
}

namespace {

std::string int_str(const Int& v) { return v.get_str(); }

std::string pair_str(const ManifoldInvariants& inv) {
    return "(b3, div p1) = (" + int_str(inv.b3) + ", " + int_str(inv.div_p1) + ")";
}

void require_wilkens_hypotheses(const ManifoldInvariants& inv) {
    validate_invariants(inv);
    if (!inv.two_connected || !inv.h4_torsion_free)
        fail_input("classification theorem not applicable: requires a 2-connected manifold "
                   "with torsion-free H4");
}

} // namespace

ComparisonVerdict wilkens_compare(const ManifoldInvariants& a, const ManifoldInvariants& b) {
    require_wilkens_hypotheses(a);
    require_wilkens_hypotheses(b);
    ComparisonVerdict verdict;
    if (a.b3 != b.b3 || a.div_p1 != b.div_p1) {
        verdict.level = VerdictLevel::distinct_manifolds;
        verdict.reasoning.push_back(
            "[wilkens-classification] " + pair_str(a) + " vs " + pair_str(b) +
            ": 2-connected 7-manifolds with torsion-free H4 and different invariant pairs are "
            "not homeomorphic");
        return verdict;
    }
    verdict.reasoning.push_back(
        "[wilkens-classification] both manifolds have " + pair_str(a) +
        ": 2-connected 7-manifolds with torsion-free H4 and equal invariant pairs are "
        "almost-diffeomorphic");
    const bool div16 = int_mod(a.div_p1, Int(16)) == 0;
    const bool div7 = int_mod(a.div_p1, Int(7)) == 0;
    if (div16 || div7) {
        verdict.level = VerdictLevel::almost_diffeomorphic_only;
        verdict.reasoning.push_back(
            "[wilkens-classification] div p1 = " + int_str(a.div_p1) + " is divisible by " +
            std::string(div16 ? "16" : "7") +
            ", so the almost-diffeomorphism is not promoted to a diffeomorphism by these "
            "invariants");
        return verdict;
    }
    verdict.level = VerdictLevel::diffeomorphic;
    verdict.reasoning.push_back("[wilkens-classification] div p1 = " + int_str(a.div_p1) +
                                " is divisible by neither 16 nor 7, so the manifolds are "
                                "diffeomorphic");
    return verdict;
}

std::optional<int> g2_structure_classes(const ManifoldInvariants& inv) {
    require_wilkens_hypotheses(inv);
    if (int_mod(Int(224), inv.div_p1) == 0) return 24;
    return std::nullopt;
}

namespace {

Int require_integral_nu_bar(const ManifoldInvariants& inv) {
    if (!is_integral(*inv.nu_bar))
        fail_input("nu_bar must be an integer to compare structures");
    return rat_num(*inv.nu_bar);
}

} // namespace

ComparisonVerdict full_verdict(const ManifoldInvariants& a, const ManifoldInvariants& b) {
    ComparisonVerdict verdict = wilkens_compare(a, b);
    if (verdict.level != VerdictLevel::diffeomorphic) return verdict;

    if (!a.nu_bar || !b.nu_bar) {
        verdict.reasoning.push_back(
            "[nu-mod-48-conversion] nu_bar is unavailable for at least one manifold, so the "
            "structure comparison stops at the smooth level");
        return verdict;
    }
    const int nu_a = nu_mod_48(require_integral_nu_bar(a), a.b1, a.holonomy_exactly_g2);
    const int nu_b = nu_mod_48(require_integral_nu_bar(b), b.b1, b.holonomy_exactly_g2);
    verdict.reasoning.push_back("[nu-mod-48-conversion] nu = nu_bar + 24 (1 + b1) mod 48 gives " +
                                std::to_string(nu_a) + " vs " + std::to_string(nu_b));
    if (nu_a != nu_b) {
        verdict.level = VerdictLevel::diffeomorphic_distinct_structures;
        verdict.reasoning.push_back(
            "[nu-mod-48-conversion] nu is an invariant of the structure up to homotopy and "
            "diffeomorphism, so different values force distinct structures");
        return verdict;
    }
    const std::optional<int> classes = g2_structure_classes(a);
    if (!classes) {
        verdict.level = VerdictLevel::indistinguishable_by_these_invariants;
        verdict.reasoning.push_back(
            "[structure-count-24] div p1 = " + a.div_p1.get_str() +
            " does not divide 224, so equal nu values are not known to identify the structures; "
            "the comparison is undecided");
        return verdict;
    }
    verdict.reasoning.push_back(
        "[structure-count-24] div p1 = " + a.div_p1.get_str() + " divides 224, so the manifold "
        "carries exactly " + std::to_string(*classes) +
        " structure classes separated completely by nu; equal nu values identify the structures "
        "up to homotopy and diffeomorphism");
    if (*a.nu_bar != *b.nu_bar) {
        verdict.level = VerdictLevel::diffeomorphic_same_structure_distinct_moduli_components;
        verdict.reasoning.push_back(
            "[moduli-local-constancy] nu_bar is constant on each connected component of the "
            "moduli space of torsion-free structures; nu_bar = " + rat_to_string(*a.nu_bar) +
            " vs " + rat_to_string(*b.nu_bar) + " places the metrics in different components");
        return verdict;
    }
    verdict.level = VerdictLevel::indistinguishable_by_these_invariants;
    verdict.reasoning.push_back(
        "[moduli-local-constancy] nu_bar agrees at " + rat_to_string(*a.nu_bar) +
        ": these invariants cannot separate the two any further");
    return verdict;
}

} // namespace etcs
