#include "etcs/angles.hpp"

#include <algorithm>

#include "etcs/spectral.hpp"

namespace etcs {

std::vector<size_t> plus_block(const Configuration& cfg) {
    std::vector<size_t> idx(cfg.rank_plus);
    for (size_t i = 0; i < cfg.rank_plus; ++i) idx[i] = i;
    return idx;
}

std::vector<size_t> minus_block(const Configuration& cfg) {
    std::vector<size_t> idx(cfg.rank_minus);
    for (size_t i = 0; i < cfg.rank_minus; ++i) idx[i] = cfg.rank_plus + i;
    return idx;
}

void validate_configuration(const Configuration& cfg) {
    if (cfg.rank_plus == 0 || cfg.rank_minus == 0) fail_input("each block must have rank at least 1");
    if (!cfg.gram.is_square() || cfg.gram.n != cfg.rank_plus + cfg.rank_minus)
        fail_input("gram size must equal rank_plus + rank_minus");
    if (!cfg.gram.is_symmetric()) fail_input("gram must be symmetric");
    for (size_t i = 0; i < cfg.gram.n; ++i)
        for (size_t j = 0; j < cfg.gram.n; ++j)
            if (!is_integral(cfg.gram(i, j))) fail_input("gram entries must be integers");
    if (cfg.k_plus == 0 || cfg.k_minus == 0) fail_input("quotient orders must be at least 1");
    if (!(sgn(cfg.theta) > 0 && cfg.theta < Rat(1)))
        fail_input("gluing angle must lie strictly between 0 and pi");
    validate_polarising(cfg.gram.submatrix(plus_block(cfg), plus_block(cfg)));
    validate_polarising(cfg.gram.submatrix(minus_block(cfg), minus_block(cfg)));
    const Inertia in_w = inertia(cfg.gram);
    if (in_w.pos > 3) fail_input("positive index of the pairing exceeds 3");
    if (in_w.neg > 19) fail_input("negative index of the pairing exceeds 19");
    if (cfg.k_plus <= 2 && cfg.k_minus <= 2) {
        static const Rat allowed[] = {make_rat(Int(1), Int(6)), make_rat(Int(1), Int(4)),
                                      make_rat(Int(1), Int(3)), make_rat(Int(1), Int(2)),
                                      make_rat(Int(2), Int(3)), make_rat(Int(3), Int(4)),
                                      make_rat(Int(5), Int(6))};
        bool ok = false;
        for (const Rat& t : allowed) ok = ok || (cfg.theta == t);
        if (!ok)
            fail_input("gluing angle must be one of pi/6, pi/4, pi/3, pi/2, 2pi/3, 3pi/4, 5pi/6 "
                       "when both quotient orders are at most 2");
    }
}

RatMat composite_isometry(const Configuration& cfg) {
    if (cfg.rank_plus == 0 || cfg.rank_minus == 0) fail_input("each block must have rank at least 1");
    if (!cfg.gram.is_square() || cfg.gram.n != cfg.rank_plus + cfg.rank_minus)
        fail_input("gram size must equal rank_plus + rank_minus");
    if (!cfg.gram.is_symmetric()) fail_input("gram must be symmetric");
    if (inertia(cfg.gram).zero != 0) fail_math("degenerate span");
    const RatMat a_plus = reflection_in_block(cfg.gram, plus_block(cfg));
    const RatMat a_minus = reflection_in_block(cfg.gram, minus_block(cfg));
    return a_plus * a_minus;
}

namespace {

void append_angles(std::vector<ExactAngle>& plus_side, std::vector<ExactAngle>& minus_side,
                   const ExactAngle& angle, int pos_count, int neg_count) {
    for (int i = 0; i < pos_count; ++i) plus_side.push_back(angle);
    for (int i = 0; i < neg_count; ++i) minus_side.push_back(angle);
}

} // namespace

AngleSpectrum configuration_angles(const Configuration& cfg, const EvalMode& mode) {
    validate_configuration(cfg);
    const RatMat m = composite_isometry(cfg);
    const size_t n = cfg.gram.n;
    const Inertia in_w = inertia(cfg.gram);

    RatPoly p = char_poly(m);
    const UnitCircleSplit<Rat> split = split_unit_circle(p, "composite isometry");

    AngleSpectrum out;
    // eigenvalue +1: zeros, split by the inertia of the fixed space
    if (split.mult_plus_one > 0) {
        const RatMat basis = kernel_basis(m - RatMat::identity(n));
        if (basis.m != split.mult_plus_one) fail_math("decomposition hypothesis violated");
        const RatMat restricted = basis.transpose() * cfg.gram * basis;
        const Inertia in = inertia_in_mode(restricted, mode);
        if (in.zero != 0) fail_math("decomposition hypothesis violated");
        append_angles(out.alpha_plus, out.alpha_minus, ExactAngle::zero(), in.pos, in.neg);
    }
    // eigenvalue -1: angle pi, split the same way
    if (split.mult_minus_one > 0) {
        const RatMat basis = kernel_basis(m + RatMat::identity(n));
        if (basis.m != split.mult_minus_one) fail_math("decomposition hypothesis violated");
        const RatMat restricted = basis.transpose() * cfg.gram * basis;
        const Inertia in = inertia_in_mode(restricted, mode);
        if (in.zero != 0) fail_math("decomposition hypothesis violated");
        append_angles(out.alpha_plus, out.alpha_minus, ExactAngle::pi(), in.pos, in.neg);
    }
    // rotation clusters: each root c of a factor s (multiplicity l) carries l
    // planes rotating by +-arccos(c); the pairing is definite on each plane,
    // and the per-root signature fixes how many planes are positive
    if (!split.rotations.empty()) {
        const RatMat t = (m + inverse(m)) * make_rat(Int(1), Int(2));
        for (const auto& cluster : split.rotations) {
            const int d = cluster.factor.degree();
            const unsigned l = cluster.multiplicity;
            if (static_cast<size_t>(d) != cluster.cosines.size())
                fail_math("decomposition hypothesis violated");
            const RatMat sm = poly_at_matrix(unhalved_factor(cluster.factor), m);
            const RatMat basis = kernel_basis(sm);
            if (basis.m != 2 * static_cast<size_t>(d) * l) fail_math("decomposition hypothesis violated");
            const RatMat t_k = solve_exact(basis, t * basis);
            const RatMat g_k = basis.transpose() * cfg.gram * basis;
            const std::vector<int> delta = per_root_signatures<Rat>(
                g_k, t_k, cluster.factor, cluster.cosines,
                [&mode](const RatMat& f) { return inertia_in_mode(f, mode); }, "composite isometry");
            for (int j = 0; j < d; ++j) {
                const int twice = 2 * static_cast<int>(l) + delta[static_cast<size_t>(j)];
                if (twice % 4 != 0) fail_math("decomposition hypothesis violated");
                const int a = twice / 4;
                if (a < 0 || a > static_cast<int>(l)) fail_math("decomposition hypothesis violated");
                const RootInterval& iv = cluster.cosines[static_cast<size_t>(j)];
                const RealAlgebraic cosine =
                    iv.exact ? RealAlgebraic(*iv.exact)
                             : RealAlgebraic::root_of(cluster.factor, iv.lo, iv.hi);
                const ExactAngle up = ExactAngle::from_cos_and_sign(cosine, 1);
                const ExactAngle down = ExactAngle::from_cos_and_sign(cosine, -1);
                for (int c = 0; c < a; ++c) {
                    out.alpha_plus.push_back(up);
                    out.alpha_plus.push_back(down);
                }
                for (int c = 0; c < static_cast<int>(l) - a; ++c) {
                    out.alpha_minus.push_back(up);
                    out.alpha_minus.push_back(down);
                }
            }
        }
    }
    if (out.alpha_plus.size() != static_cast<size_t>(in_w.pos) ||
        out.alpha_minus.size() != static_cast<size_t>(in_w.neg))
        fail_math("decomposition hypothesis violated");
    // pad the unused slots of the rank-3 and rank-19 ambient lattices
    while (out.alpha_plus.size() < 3) out.alpha_plus.push_back(ExactAngle::zero());
    while (out.alpha_minus.size() < 19) out.alpha_minus.push_back(ExactAngle::zero());
    sort_angles(out.alpha_plus);
    sort_angles(out.alpha_minus);
    return out;
}

namespace {

std::vector<std::pair<RealAlgebraic, unsigned>> real_eigenvalues(const RatMat& m) {
    const RatPoly p = char_poly_monic(m);
    std::vector<std::pair<RealAlgebraic, unsigned>> out;
    unsigned found = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (const RootInterval& iv : isolate_real_roots(factor)) {
            RealAlgebraic value = iv.exact ? RealAlgebraic(*iv.exact)
                                           : RealAlgebraic::root_of(factor, iv.lo, iv.hi);
            out.emplace_back(std::move(value), mult);
            found += mult;
        }
    }
    if (found != static_cast<unsigned>(m.n)) fail_math("projection composite has non-real eigenvalues");
    for (const auto& [value, mult] : out)
        if (value < RealAlgebraic(Rat(0)) || RealAlgebraic(Rat(1)) < value)
            fail_math("projection eigenvalue outside [0, 1]");
    return out;
}

} // namespace

ProjectionSpectra angles_via_projections(const Configuration& cfg) {
    validate_configuration(cfg);
    const auto pb = plus_block(cfg);
    const auto mb = minus_block(cfg);
    const RatMat g_plus = cfg.gram.submatrix(pb, pb);
    const RatMat g_minus = cfg.gram.submatrix(mb, mb);
    const RatMat cross = cfg.gram.submatrix(pb, mb);
    ProjectionSpectra out;
    out.on_plus = real_eigenvalues(inverse(g_plus) * cross * inverse(g_minus) * cross.transpose());
    out.on_minus = real_eigenvalues(inverse(g_minus) * cross.transpose() * inverse(g_plus) * cross);
    return out;
}

namespace {

// removes one copy of value from the multiset, false if absent
bool remove_one(std::vector<std::pair<RealAlgebraic, unsigned>>& eigs, const RealAlgebraic& value) {
    for (auto& [v, count] : eigs)
        if (count > 0 && v == value) {
            --count;
            return true;
        }
    return false;
}

} // namespace

void check_route_equivalence(const Configuration& cfg, const EvalMode& mode) {
    const AngleSpectrum spectrum = configuration_angles(cfg, mode);
    ProjectionSpectra proj = angles_via_projections(cfg);
    const Inertia in_w = inertia(cfg.gram);

    std::vector<ExactAngle> all = spectrum.alpha_plus;
    all.insert(all.end(), spectrum.alpha_minus.begin(), spectrum.alpha_minus.end());
    size_t pis = 0;
    size_t zeros = 0;
    std::vector<ExactAngle> pairs;
    for (const ExactAngle& a : all) {
        if (a.is_pi())
            ++pis;
        else if (a.is_zero())
            ++zeros;
        else if (a.sign_part() > 0)
            pairs.push_back(a);
    }
    const size_t padding = (3 - static_cast<size_t>(in_w.pos)) + (19 - static_cast<size_t>(in_w.neg));
    if (zeros < padding) fail_math("angle routes disagree: fewer zeros than padding slots");
    const size_t honest_zeros = zeros - padding;

    for (const ExactAngle& a : pairs) {
        // rotation by phi contributes the eigenvalue (1 + cos phi)/2 on both sides
        const RealAlgebraic lambda = a.cosine().affine(make_rat(Int(1), Int(2)), make_rat(Int(1), Int(2)));
        if (!remove_one(proj.on_plus, lambda) || !remove_one(proj.on_minus, lambda))
            fail_math("angle routes disagree: rotation eigenvalue missing from a projection spectrum");
    }
    size_t remaining_zero = 0;
    size_t remaining_one = 0;
    for (const auto& side : {proj.on_plus, proj.on_minus})
        for (const auto& [v, count] : side) {
            if (count == 0) continue;
            if (v == RealAlgebraic(Rat(0)))
                remaining_zero += count;
            else if (v == RealAlgebraic(Rat(1)))
                remaining_one += count;
            else
                fail_math("angle routes disagree: leftover projection eigenvalue is neither 0 nor 1");
        }
    if (remaining_zero != pis)
        fail_math("angle routes disagree: zero eigenvalues do not match the pi count");
    if (remaining_one != honest_zeros)
        fail_math("angle routes disagree: unit eigenvalues do not match the zero-angle count");
}

MatchingCheck check_matching_compatibility(const Configuration& cfg, const EvalMode& mode) {
    MatchingCheck out;
    out.spectrum = configuration_angles(cfg, mode);
    const Rat two_theta = cfg.theta + cfg.theta;
    out.expected = {ExactAngle::zero(), ExactAngle::from_pi_fraction(two_theta),
                    ExactAngle::from_pi_fraction(Rat(0) - two_theta)};
    sort_angles(out.expected);
    out.pass = same_angle_multiset(out.spectrum.alpha_plus, out.expected);
    if (!out.pass)
        out.message = "configuration angles incompatible with declared gluing angle: alpha+ = " +
                      render_angle_multiset(out.spectrum.alpha_plus) + ", expected " +
                      render_angle_multiset(out.expected);
    return out;
}

AngleSpectrum require_matching_compatibility(const Configuration& cfg, const EvalMode& mode) {
    MatchingCheck check = check_matching_compatibility(cfg, mode);
    if (!check.pass) fail_incompatible(check.message);
    return std::move(check.spectrum);
}

} // namespace etcs
