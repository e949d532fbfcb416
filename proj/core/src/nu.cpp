#include "etcs/nu.hpp"

namespace etcs {

namespace {

Rat resolve_half(unsigned k, const std::optional<Rat>& declared, const char* side) {
    if (k <= 2) {
        if (declared && sgn(*declared) != 0)
            fail_input(std::string("nu_bar of the ") + side +
                       " half is forced to 0 when its quotient order is at most 2");
        return Rat(0);
    }
    if (!declared)
        fail_input(std::string("quotient order of the ") + side +
                   " half exceeds 2: supply its nu_bar invariant");
    return *declared;
}

} // namespace

NuReport nu_bar(const Configuration& cfg, const Int& b1, const EvalMode& mode) {
    if (sgn(b1) < 0) fail_input("b1 must be non-negative");
    const Rat half_plus = resolve_half(cfg.k_plus, cfg.nu_bar_plus, "positive");
    const Rat half_minus = resolve_half(cfg.k_minus, cfg.nu_bar_minus, "negative");
    const AngleSpectrum spectrum = require_matching_compatibility(cfg, mode);
    const Rho rho = rho_from_theta(cfg.theta);

    NuReport report;
    report.rho_over_pi = rho.over_pi;
    report.m_rho_value = m_rho(rho, spectrum.alpha_minus);
    report.term_halves = half_plus + half_minus;
    report.term_gluing = Rat(-72) * rho.over_pi;
    report.term_maslov = 3 * report.m_rho_value;
    report.nu_bar = report.term_halves + report.term_gluing + Rat(report.term_maslov);
    report.b1 = b1;
    report.integral = is_integral(report.nu_bar);
    report.conditional_on_halves = cfg.k_plus > 2 || cfg.k_minus > 2;
    if (!report.integral && cfg.k_plus <= 2 && cfg.k_minus <= 2)
        fail_math("nu_bar must be an integer when both quotient orders are at most 2");
    if (report.integral) {
        report.nu_mod_48 = static_cast<int>(
            int_mod(rat_num(report.nu_bar) + 24 * (1 + b1), Int(48)).get_si());
        report.divisible_by_3 = int_mod(rat_num(report.nu_bar), Int(3)) == 0;
    }
    report.within_bound = bound_check(report.rho_over_pi, report.m_rho_value);
    return report;
}

int nu_mod_48(const Int& nu_bar_value, const Int& b1, bool holonomy_exactly) {
    if (sgn(b1) < 0) fail_input("b1 must be non-negative");
    if (holonomy_exactly && sgn(b1) != 0)
        fail_input("holonomy exactly the exceptional group forces b1 = 0");
    return static_cast<int>(int_mod(nu_bar_value + 24 * (1 + b1), Int(48)).get_si());
}

Rat eta_signature(const Configuration& cfg, const Rat& eta_plus, const Rat& eta_minus,
                  const EvalMode& mode) {
    const AngleSpectrum spectrum = require_matching_compatibility(cfg, mode);
    const Rho rho = rho_from_theta(cfg.theta);
    const Int m = m_rho(rho, spectrum.alpha_minus);
    return eta_plus + eta_minus + Rat(-16) * rho.over_pi + Rat(m);
}

bool bound_check(const Rat& rho_over_pi, const Int& m_rho_value) {
    if (rat_abs(rho_over_pi) >= Rat(1)) fail_input("rho must lie strictly between -pi and pi");
    const int s = sgn(rho_over_pi);
    if (s == 0) {
        if (sgn(m_rho_value) != 0) fail_input("m_rho must vanish when rho does");
    } else {
        const Int signed_m = Int(s) * m_rho_value;
        if (signed_m < -1 || signed_m > 18)
            fail_input("m_rho is out of range for a 19-angle multiset");
    }
    const Rat value = Rat(-72) * rho_over_pi + Rat(3 * m_rho_value);
    return Rat(-75) < value && value < Rat(75);
}

} // namespace etcs
