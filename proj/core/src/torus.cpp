#include "etcs/torus.hpp"

#include <algorithm>

#include "etcs/algebraic.hpp"
#include "etcs/error.hpp"
#include "etcs/matrix.hpp"

namespace etcs {

void validate_torus_factor(const TorusFactor& t) {
    if (t.k == 0) fail_input("quotient order must be at least 1");
    if (sgn(t.zeta) <= 0 || sgn(t.xi) <= 0) fail_input("torus side lengths must be positive");
}

Surd norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }
Surd inner(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
Surd det2(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

Int surd_floor(const Surd& s) {
    if (s.is_rational()) return rat_floor(s.to_rat());
    const auto [lo, hi] = s.enclosure(make_rat(Int(1), Int(4)));
    const Int base = rat_floor(lo);
    for (Int cand = base - 1; cand <= base + 2; ++cand) {
        if (sgn(s - Surd(Rat(cand))) >= 0 && sgn(s - Surd(Rat(cand + 1))) < 0) return cand;
    }
    fail_math("floor of surd could not be certified");
}

namespace {

Int round_nearest(const Surd& s) { return surd_floor(s + Surd(make_rat(Int(1), Int(2)))); }

Vec2 sub_scaled(const Vec2& v, const Vec2& w, const Int& mu) {
    const Surd f{Rat(mu)};
    return Vec2{v.x - w.x * f, v.y - w.y * f};
}

Vec2 negate(const Vec2& v) { return Vec2{Surd(0) - v.x, Surd(0) - v.y}; }

} // namespace

PlanarLattice quotient_lattice(const TorusFactor& t) {
    validate_torus_factor(t);
    const Surd order{Rat(Int(t.k))};
    Vec2 v1{t.zeta, Surd(0)};
    Vec2 v2{t.zeta / order, t.xi / order};
    for (int guard = 0; guard < 1000; ++guard) {
        if (sgn(norm2(v2) - norm2(v1)) < 0) std::swap(v1, v2);
        const Int mu = round_nearest(inner(v1, v2) / norm2(v1));
        if (sgn(mu) == 0) break;
        v2 = sub_scaled(v2, v1, mu);
    }
    if (sgn(norm2(v2) - norm2(v1)) < 0) std::swap(v1, v2);
    if (sgn(inner(v1, v2)) < 0) v2 = negate(v2);
    if (sgn(inner(v1, v2)) == 0 && sgn(det2(v1, v2)) < 0) v2 = negate(v2);
    return PlanarLattice{v1, v2};
}

namespace {

// smallest non-negative integer bound with bound^2 >= value
long int_sqrt_bound(const Surd& value) {
    if (sgn(value) <= 0) return 0;
    for (long b = 0; b <= 100000; ++b)
        if (sgn(Surd(Rat(Int(b) * Int(b))) - value) >= 0) return b;
    fail_math("lattice enumeration bound too large");
}

std::vector<Vec2> vectors_of_norm(const PlanarLattice& lat, const Surd& target) {
    const Surd a = norm2(lat.b1);
    const Surd c = norm2(lat.b2);
    const Surd four_thirds{make_rat(Int(4), Int(3))};
    const long bx = int_sqrt_bound(four_thirds * target / a);
    const long by = int_sqrt_bound(four_thirds * target / c);
    std::vector<Vec2> out;
    for (long x = -bx; x <= bx; ++x)
        for (long y = -by; y <= by; ++y) {
            const Surd fx{Rat(Int(x))};
            const Surd fy{Rat(Int(y))};
            Vec2 v{lat.b1.x * fx + lat.b2.x * fy, lat.b1.y * fx + lat.b2.y * fy};
            if (sgn(norm2(v) - target) == 0) out.push_back(v);
        }
    return out;
}

} // namespace

std::vector<ExactAngle> gluing_angles(const TorusFactor& t_plus, const TorusFactor& t_minus) {
    const PlanarLattice plus = quotient_lattice(t_plus);
    const PlanarLattice minus = quotient_lattice(t_minus);
    std::vector<ExactAngle> out;

    Surd covol_plus = det2(plus.b1, plus.b2);
    if (sgn(covol_plus) < 0) covol_plus = Surd(0) - covol_plus;
    Surd covol_minus = det2(minus.b1, minus.b2);
    if (sgn(covol_minus) < 0) covol_minus = Surd(0) - covol_minus;
    if (sgn(covol_plus - covol_minus) != 0) return out;

    const Surd n1 = norm2(minus.b1);
    const Surd n2 = norm2(minus.b2);
    const Surd ip = inner(minus.b1, minus.b2);
    const Surd dm = det2(minus.b1, minus.b2);

    Mat<Surd> basis(2, 2);
    basis(0, 0) = minus.b1.x;
    basis(1, 0) = minus.b1.y;
    basis(0, 1) = minus.b2.x;
    basis(1, 1) = minus.b2.y;
    const Mat<Surd> basis_inv = inverse(basis);

    const std::vector<Vec2> vs = vectors_of_norm(plus, n1);
    const std::vector<Vec2> ws = sgn(n1 - n2) == 0 ? vs : vectors_of_norm(plus, n2);
    for (const Vec2& v : vs)
        for (const Vec2& w : ws) {
            if (sgn(inner(v, w) - ip) != 0) continue;
            if (sgn(det2(v, w) + dm) != 0) continue;
            Mat<Surd> images(2, 2);
            images(0, 0) = v.x;
            images(1, 0) = v.y;
            images(0, 1) = w.x;
            images(1, 1) = w.y;
            const Mat<Surd> p = images * basis_inv;
            // an isometry carrying a basis to a matching Gram with reversed
            // orientation is a reflection: symmetric and trace-free
            if (sgn(p(0, 1) - p(1, 0)) != 0 || sgn(p(0, 0) + p(1, 1)) != 0)
                fail_math("torus matching produced a non-reflection");
            if (sgn(p(0, 1)) <= 0) continue; // need sin theta > 0
            out.push_back(ExactAngle::from_cos_and_sign(RealAlgebraic::from_surd(p(1, 1)), 1));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace etcs
