#include "etcs/lattice.hpp"

#include <cmath>
#include <limits>

#include "etcs/spectral.hpp"

namespace etcs {

void validate_polarising(const RatMat& gram) {
    if (!gram.is_square() || gram.n == 0) fail_input("polarising form must be square and nonempty");
    if (!gram.is_symmetric()) fail_input("polarising form must be symmetric");
    for (size_t i = 0; i < gram.n; ++i) {
        if (!is_integral(gram(i, i)) || int_mod(rat_num(gram(i, i)), Int(2)) != 0)
            fail_input("polarising form must have even diagonal");
    }
    const Inertia in = inertia(gram);
    if (in.zero != 0) fail_input("polarising form is degenerate");
    if (in.pos != 1 || in.neg != static_cast<int>(gram.n) - 1)
        fail_input("polarising form must have signature (1, rank-1)");
}

RatMat projection_onto_block(const RatMat& gram, const std::vector<size_t>& block) {
    if (!gram.is_square() || !gram.is_symmetric()) fail_input("gram matrix must be symmetric");
    for (size_t b : block)
        if (b >= gram.n) fail_input("block index out of range");
    RatMat E(gram.n, block.size());
    for (size_t j = 0; j < block.size(); ++j) E(block[j], j) = Rat(1);
    const RatMat Et = E.transpose();
    const RatMat inner = Et * gram * E; // gram restricted to the block
    if (inertia(inner).zero != 0) fail_math("degenerate span");
    return E * inverse(inner) * (Et * gram);
}

RatMat reflection_in_block(const RatMat& gram, const std::vector<size_t>& block) {
    const RatMat P = projection_onto_block(gram, block);
    return P * Rat(2) - RatMat::identity(gram.n);
}

RatPoly char_poly(const RatMat& m) {
    return primitive_integer_poly(char_poly_monic(m));
}

CosineSpectrum unit_circle_angles(const RatPoly& p) {
    auto split = split_unit_circle(p, "non-orthogonal composite");
    CosineSpectrum out;
    if (split.mult_plus_one > 0)
        out.entries.emplace_back(RealAlgebraic(Rat(1)), split.mult_plus_one);
    for (auto& cluster : split.rotations)
        for (auto& iv : cluster.cosines) {
            RealAlgebraic c = iv.exact ? RealAlgebraic(*iv.exact)
                                       : RealAlgebraic::root_of(cluster.factor, iv.lo, iv.hi);
            out.entries.emplace_back(std::move(c), cluster.multiplicity);
        }
    if (split.mult_minus_one > 0)
        out.entries.emplace_back(RealAlgebraic(Rat(-1)), split.mult_minus_one);
    std::sort(out.entries.begin(), out.entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

namespace {

// Closed interval with double endpoints. Operations widen an endpoint by one
// ulp only when the double computation was inexact, so integer-valued data
// passes through elimination with width-zero intervals and an exact zero
// stays certifiably zero.
struct Iv {
    double lo = 0.0, hi = 0.0;

    static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
    static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

    bool exactly_zero() const { return lo == 0.0 && hi == 0.0; }
    bool sign_certain() const { return lo > 0.0 || hi < 0.0; }
    double min_abs() const { return lo > 0.0 ? lo : (hi < 0.0 ? -hi : 0.0); }
    double mid() const { return 0.5 * (lo + hi); }
};

Iv iv_add(const Iv& a, const Iv& b) {
    double l = a.lo + b.lo;
    if (!(l - a.lo == b.lo && l - b.lo == a.lo)) l = Iv::down(l);
    double h = a.hi + b.hi;
    if (!(h - a.hi == b.hi && h - b.hi == a.hi)) h = Iv::up(h);
    return {l, h};
}

Iv iv_neg(const Iv& a) { return {-a.hi, -a.lo}; }

Iv iv_sub(const Iv& a, const Iv& b) { return iv_add(a, iv_neg(b)); }

Iv iv_mul(const Iv& a, const Iv& b) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const double xs[2] = {a.lo, a.hi};
    const double ys[2] = {b.lo, b.hi};
    for (double x : xs)
        for (double y : ys) {
            const double p = x * y;
            const bool exact = std::fma(x, y, -p) == 0.0;
            lo = std::min(lo, exact ? p : Iv::down(p));
            hi = std::max(hi, exact ? p : Iv::up(p));
        }
    return {lo, hi};
}

// b must be sign-certain (0 not contained).
Iv iv_div(const Iv& a, const Iv& b) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const double xs[2] = {a.lo, a.hi};
    const double ys[2] = {b.lo, b.hi};
    for (double x : xs)
        for (double y : ys) {
            const double q = x / y;
            const bool exact = std::fma(q, y, -x) == 0.0;
            lo = std::min(lo, exact ? q : Iv::down(q));
            hi = std::max(hi, exact ? q : Iv::up(q));
        }
    return {lo, hi};
}

Iv iv_from_rat(const Rat& r) {
    const double d = rat_to_double(r);
    if (Rat(d) == r) return {d, d};
    return {Iv::down(d), Iv::up(d)};
}

} // namespace

Inertia numeric_inertia(const RatMat& gram, double tolerance) {
    if (!gram.is_symmetric()) fail_math("inertia requires a symmetric matrix");
    const size_t n = gram.n;
    std::vector<Iv> A(n * n);
    double scale = 0.0;
    for (size_t i = 0; i < n * n; ++i) {
        A[i] = iv_from_rat(gram.a[i]);
        if (!std::isfinite(A[i].lo) || !std::isfinite(A[i].hi))
            fail_math("numeric fallback cannot certify inertia within tolerance");
        scale = std::max(scale, std::fabs(A[i].mid()));
    }
    if (scale == 0.0) return Inertia{0, 0, static_cast<int>(n)};
    const double cut = tolerance * scale;
    auto at = [&](size_t i, size_t j) -> Iv& { return A[i * n + j]; };
    auto usable = [&](const Iv& v) { return v.sign_certain() && v.min_abs() > cut; };
    Inertia out;
    size_t k = 0;
    while (k < n) {
        // pick the usable diagonal pivot of largest magnitude
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (usable(at(i, i)) && (piv == n || std::fabs(at(i, i).mid()) > std::fabs(at(piv, piv).mid())))
                piv = i;
        if (piv == n) {
            // no usable diagonal entry: either the whole trailing block is
            // exactly zero, or a certainly-nonzero off-diagonal entry can be
            // folded onto the diagonal; anything else is uncertifiable
            bool all_zero = true;
            for (size_t i = k; i < n && all_zero; ++i)
                for (size_t j = i; j < n && all_zero; ++j)
                    if (!at(i, j).exactly_zero()) all_zero = false;
            if (all_zero) {
                out.zero += static_cast<int>(n - k);
                return out;
            }
            size_t oi = n, oj = n;
            for (size_t i = k; i < n && oi == n; ++i)
                for (size_t j = i + 1; j < n && oi == n; ++j)
                    if (usable(at(i, j))) {
                        oi = i;
                        oj = j;
                    }
            if (oi == n) fail_math("numeric fallback cannot certify inertia within tolerance");
            for (size_t j = 0; j < n; ++j) at(oi, j) = iv_add(at(oi, j), at(oj, j));
            for (size_t i = 0; i < n; ++i) at(i, oi) = iv_add(at(i, oi), at(i, oj));
            if (!usable(at(oi, oi))) fail_math("numeric fallback cannot certify inertia within tolerance");
            piv = oi;
        }
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            for (size_t i = 0; i < n; ++i) std::swap(at(i, k), at(i, piv));
        }
        const Iv d = at(k, k);
        if (d.lo > 0.0)
            ++out.pos;
        else
            ++out.neg;
        std::vector<Iv> col(n);
        for (size_t i = k + 1; i < n; ++i) col[i] = at(i, k);
        for (size_t i = k + 1; i < n; ++i) {
            const Iv f = iv_div(col[i], d);
            for (size_t j = i; j < n; ++j) {
                const Iv upd = iv_sub(at(i, j), iv_mul(f, col[j]));
                at(i, j) = upd;
                at(j, i) = upd;
            }
        }
        for (size_t i = k + 1; i < n; ++i) {
            at(i, k) = Iv{};
            at(k, i) = Iv{};
        }
        ++k;
    }
    return out;
}

Inertia inertia_in_mode(const RatMat& gram, const EvalMode& mode) {
    if (mode.exact) return inertia(gram);
    return numeric_inertia(gram, mode.tolerance);
}

} // namespace etcs
