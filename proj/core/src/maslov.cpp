#include "etcs/maslov.hpp"

#include <algorithm>

#include "etcs/algebraic.hpp"
#include "etcs/error.hpp"
#include "etcs/spectral.hpp"

namespace etcs {

void validate_lagrangian_pair(const LagrangianPair& pair) {
    const size_t dim = pair.metric.n;
    if (dim == 0 || dim % 2 != 0) fail_input("symplectic dimension must be even and positive");
    const size_t half = dim / 2;
    if (!pair.metric.is_square() || !pair.metric.is_symmetric())
        fail_input("metric must be symmetric");
    if (inertia(pair.metric).pos != static_cast<int>(dim))
        fail_input("metric must be positive definite");
    if (!pair.gamma.is_square() || pair.gamma.n != dim)
        fail_input("gamma must act on the same space as the metric");
    const SurdMat minus_id = SurdMat::identity(dim) * Surd(Rat(-1));
    if (!(pair.gamma * pair.gamma - minus_id).is_zero())
        fail_input("gamma must square to minus the identity");
    if (!(pair.gamma.transpose() * pair.metric * pair.gamma - pair.metric).is_zero())
        fail_input("gamma must be a metric isometry");
    const SurdMat omega = pair.gamma.transpose() * pair.metric;
    for (const SurdMat* basis : {&pair.basis_plus, &pair.basis_minus}) {
        if (basis->n != dim || basis->m != half)
            fail_input("lagrangian basis must have dim rows and dim/2 columns");
        if (rank(*basis) != half) fail_input("lagrangian basis must have full rank");
        if (!(basis->transpose() * omega * *basis).is_zero())
            fail_input("lagrangian subspace must be isotropic for the symplectic pairing");
    }
}

namespace {

SurdMat reflection_in(const SurdMat& basis, const SurdMat& metric) {
    const SurdMat inner = basis.transpose() * metric * basis;
    const SurdMat proj = basis * inverse(inner) * (basis.transpose() * metric);
    return proj * Surd(Rat(2)) - SurdMat::identity(metric.n);
}

} // namespace

MaslovResult maslov_angle(const LagrangianPair& pair) {
    validate_lagrangian_pair(pair);
    const size_t dim = pair.metric.n;
    const size_t half = dim / 2;

    const SurdMat a_plus = reflection_in(pair.basis_plus, pair.metric);
    const SurdMat a_minus = reflection_in(pair.basis_minus, pair.metric);
    const SurdMat r = (a_plus * a_minus) * Surd(Rat(-1));

    // dim(L+ cap L-) from the stacked bases
    SurdMat stacked(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < half; ++j) {
            stacked(i, j) = pair.basis_plus(i, j);
            stacked(i, half + j) = pair.basis_minus(i, j);
        }
    MaslovResult out;
    out.intersection_dim = dim - rank(stacked);

    Poly<Surd> cp = char_poly_monic(r);
    const UnitCircleSplit<Surd> split = split_unit_circle(cp, "lagrangian rotation");

    if (split.mult_plus_one % 2 != 0 || split.mult_minus_one % 2 != 0)
        fail_math("lagrangian rotation: odd eigenvalue multiplicity");
    if (split.mult_plus_one > 0 &&
        kernel_basis(r - SurdMat::identity(dim)).m != split.mult_plus_one)
        fail_math("lagrangian rotation: decomposition hypothesis violated");
    if (split.mult_minus_one > 0 &&
        kernel_basis(r + SurdMat::identity(dim)).m != split.mult_minus_one)
        fail_math("lagrangian rotation: decomposition hypothesis violated");
    if (split.mult_minus_one != 2 * out.intersection_dim)
        fail_math("lagrangian rotation: fixed space does not match the intersection");

    for (unsigned i = 0; i < split.mult_plus_one / 2; ++i)
        out.angle_list.push_back(ExactAngle::zero());
    for (unsigned i = 0; i < split.mult_minus_one / 2; ++i)
        out.angle_list.push_back(ExactAngle::pi());

    Rat value(0);
    bool value_known = true;

    if (!split.rotations.empty()) {
        const SurdMat t = (r + inverse(r)) * Surd(make_rat(Int(1), Int(2)));
        const SurdMat g_omega =
            pair.metric * (pair.gamma * ((r - inverse(r)) * Surd(make_rat(Int(1), Int(2)))));
        for (const auto& cluster : split.rotations) {
            const int d = cluster.factor.degree();
            const unsigned l = cluster.multiplicity;
            if (static_cast<size_t>(d) != cluster.cosines.size())
                fail_math("lagrangian rotation: decomposition hypothesis violated");
            const SurdMat basis = kernel_basis(poly_at_matrix(unhalved_factor(cluster.factor), r));
            if (basis.m != 2 * static_cast<size_t>(d) * l)
                fail_math("lagrangian rotation: decomposition hypothesis violated");
            const SurdMat t_k = solve_exact(basis, t * basis);
            const SurdMat base = basis.transpose() * g_omega * basis;
            const std::vector<int> eps = per_root_signatures<Surd>(
                base, t_k, cluster.factor, cluster.cosines,
                [](const SurdMat& f) { return inertia(f); }, "lagrangian rotation");
            for (int j = 0; j < d; ++j) {
                // eps = 2 (#opposing - #agreeing) planes at this angle
                const int twice = 2 * static_cast<int>(l) + eps[static_cast<size_t>(j)];
                if (twice % 4 != 0) fail_math("lagrangian rotation: decomposition hypothesis violated");
                const int n_opposing = twice / 4;
                if (n_opposing < 0 || n_opposing > static_cast<int>(l))
                    fail_math("lagrangian rotation: decomposition hypothesis violated");
                const int n_agreeing = static_cast<int>(l) - n_opposing;
                const RootInterval& iv = cluster.cosines[static_cast<size_t>(j)];
                const RealAlgebraic cosine = iv.exact
                                                 ? RealAlgebraic(*iv.exact)
                                                 : RealAlgebraic::from_surd_poly_root(cluster.factor, iv);
                for (int c = 0; c < n_opposing; ++c)
                    out.angle_list.push_back(ExactAngle::from_cos_and_sign(cosine, 1));
                for (int c = 0; c < n_agreeing; ++c)
                    out.angle_list.push_back(ExactAngle::from_cos_and_sign(cosine, -1));
                if (n_opposing != n_agreeing) {
                    const std::optional<Rat> frac = invert_cos_pi(cosine, 24);
                    if (frac)
                        value -= Rat(n_opposing - n_agreeing) * *frac;
                    else
                        value_known = false;
                }
            }
        }
    }
    if (out.angle_list.size() != half)
        fail_math("lagrangian rotation: angle count does not match the dimension");
    if (value_known) out.value = value;
    sort_angles(out.angle_list);
    return out;
}

Rho rho_from_theta(const Rat& theta_over_pi) {
    if (!(sgn(theta_over_pi) > 0 && theta_over_pi < Rat(1)))
        fail_input("gluing angle must lie strictly between 0 and pi");
    Rho rho;
    rho.over_pi = Rat(1) - theta_over_pi - theta_over_pi;
    rho.sign = sgn(rho.over_pi);
    return rho;
}

namespace {

struct BoundaryCounts {
    Int at_boundary{0}; // angles equal to pi - |rho| or pi
    Int interior{0};    // angles strictly between pi - |rho| and pi
};

BoundaryCounts count_against_rho(const Rho& rho, const std::vector<ExactAngle>& angles) {
    BoundaryCounts out;
    const ExactAngle boundary = ExactAngle::from_pi_fraction(Rat(1) - rat_abs(rho.over_pi));
    for (const ExactAngle& a : angles) {
        if (a.is_pi()) {
            out.at_boundary += 1;
        } else if (a.sign_part() > 0) {
            if (a == boundary)
                out.at_boundary += 1;
            else if (a.cosine() < boundary.cosine())
                out.interior += 1;
        }
    }
    return out;
}

} // namespace

Int m_rho(const Rho& rho, const std::vector<ExactAngle>& alpha_minus) {
    if (rat_abs(rho.over_pi) >= Rat(1)) fail_input("rho must lie strictly between -pi and pi");
    if (rho.sign == 0) return Int(0);
    const BoundaryCounts counts = count_against_rho(rho, alpha_minus);
    return Int(rho.sign) * (counts.at_boundary - 1 + 2 * counts.interior);
}

Rat m_h3_formula(const Rho& rho, const std::vector<ExactAngle>& alpha_plus,
                 const std::vector<ExactAngle>& alpha_minus) {
    if (rat_abs(rho.over_pi) >= Rat(1)) fail_input("rho must lie strictly between -pi and pi");
    if (rho.sign == 0) return Rat(0);
    const BoundaryCounts plus = count_against_rho(rho, alpha_plus);
    const BoundaryCounts minus = count_against_rho(rho, alpha_minus);
    const Rat correction = Rat(Int(rho.sign) * (minus.at_boundary + 2 * minus.interior -
                                                plus.at_boundary - 2 * plus.interior));
    return Rat(-16) * rho.over_pi + correction;
}

LagrangianPair kernel_example_pair(const Rat& theta_over_pi) {
    if (!(sgn(theta_over_pi) > 0 && theta_over_pi < Rat(1)))
        fail_input("gluing angle must lie strictly between 0 and pi");
    const Rat scaled = theta_over_pi * Rat(12);
    if (!is_integral(scaled)) fail_input("gluing angle outside the supported surd field");
    const long p = rat_num(scaled).get_si(); // 1..11
    const Surd quarter(make_rat(Int(1), Int(4)));
    const Surd half(make_rat(Int(1), Int(2)));
    const Surd s6p2 = (Surd::sqrt6() + Surd::sqrt2()) * quarter;
    const Surd s6m2 = (Surd::sqrt6() - Surd::sqrt2()) * quarter;
    const Surd s3h = Surd::sqrt3() * half;
    const Surd s2h = Surd::sqrt2() * half;
    const Surd zero(0);
    const Surd one(1);
    const Surd cos_tab[13] = {one,  s6p2, s3h,  s2h,  half, s6m2, zero,
                              zero - s6m2, zero - half, zero - s2h, zero - s3h, zero - s6p2, zero - one};
    const Surd sin_tab[13] = {zero, s6m2, half, s2h,  s3h,  s6p2, one,
                              s6p2, s3h,  s2h,  half, s6m2, zero};
    const Surd c = cos_tab[p];
    const Surd s = sin_tab[p];

    LagrangianPair pair;
    pair.metric = SurdMat::identity(4);
    pair.gamma = SurdMat(4, 4);
    pair.gamma(3, 0) = one;
    pair.gamma(2, 1) = one;
    pair.gamma(1, 2) = zero - one;
    pair.gamma(0, 3) = zero - one;
    pair.basis_minus = SurdMat(4, 2);
    pair.basis_minus(0, 0) = one;
    pair.basis_minus(2, 1) = one;
    pair.basis_plus = SurdMat(4, 2);
    pair.basis_plus(0, 0) = one;
    pair.basis_plus(1, 1) = s;
    pair.basis_plus(2, 1) = c;
    return pair;
}

} // namespace etcs
