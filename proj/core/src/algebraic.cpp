#include "etcs/algebraic.hpp"

#include <cmath>

#include "etcs/error.hpp"

namespace etcs {

const std::vector<RatPoly>& RealAlgebraic::chain() const {
    if (!chain_) chain_ = std::make_shared<const std::vector<RatPoly>>(sturm_chain(poly_));
    return *chain_;
}

RealAlgebraic RealAlgebraic::root_of(const RatPoly& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 1) fail_math("root of a constant polynomial requested");
    RatPoly sf = primitive_integer_poly(squarefree_part(p));
    if (sf.degree() == 1) {
        const Rat r = Rat(-sf.coeff(0) / sf.coeff(1));
        if (!(lo < r && r < hi)) fail_math("isolating interval does not contain the root");
        return RealAlgebraic(r);
    }
    if (sgn(sf.at_rat(lo)) == 0 || sgn(sf.at_rat(hi)) == 0)
        fail_math("isolating interval endpoints must not be roots");
    if (count_roots_in(sf, lo, hi) != 1)
        fail_math("interval does not isolate exactly one root");
    RealAlgebraic out;
    // the interval may isolate a rational root of a reducible squarefree poly;
    // bisection pinning it to a linear factor is not attempted here, but a
    // rational midpoint hit is detected during refinement
    out.rat_.reset();
    out.poly_ = std::move(sf);
    out.iv_ = RootInterval{std::nullopt, lo, hi};
    return out;
}

RealAlgebraic RealAlgebraic::from_surd(const Surd& s) {
    if (s.is_rational()) return RealAlgebraic(s.to_rat());
    const SurdPoly lin({-s, Surd(1)});
    RatPoly n = squarefree_part(norm_poly(lin));
    Rat eps(1);
    while (true) {
        auto [lo, hi] = s.enclosure(eps);
        if (sgn(n.at_rat(lo)) != 0 && sgn(n.at_rat(hi)) != 0 &&
            count_roots_in(n, lo, hi) == 1)
            return root_of(n, lo, hi);
        eps = eps / 4;
    }
}

RealAlgebraic RealAlgebraic::from_surd_poly_root(const SurdPoly& s, RootInterval iv) {
    if (iv.exact) return RealAlgebraic(*iv.exact);
    RatPoly n = squarefree_part(norm_poly(s));
    while (true) {
        if (sgn(n.at_rat(iv.lo)) != 0 && sgn(n.at_rat(iv.hi)) != 0 &&
            count_roots_in(n, iv.lo, iv.hi) == 1)
            return root_of(n, iv.lo, iv.hi);
        refine_root(s, iv);
        if (iv.exact) return RealAlgebraic(*iv.exact);
    }
}

std::pair<Rat, Rat> RealAlgebraic::enclosure() const {
    if (rat_) return {*rat_, *rat_};
    return {iv_.lo, iv_.hi};
}

void RealAlgebraic::refine_once() const {
    // mirrors refine_root but keeps the class invariant on exact hits
    if (rat_) return;
    const Rat m = iv_.mid();
    const int sm = sgn(poly_.at_rat(m));
    if (sm == 0) {
        iv_.exact = m;
        iv_.lo = iv_.hi = m;
        return;
    }
    if (sm == sgn(poly_.at_rat(iv_.lo)))
        iv_.lo = m;
    else
        iv_.hi = m;
}

void RealAlgebraic::refine_below(const Rat& width) const {
    if (rat_) return;
    while (!iv_.exact && iv_.width() >= width) refine_once();
}

int RealAlgebraic::sign() const {
    if (rat_) return sgn(*rat_);
    if (iv_.exact) return sgn(*iv_.exact);
    while (true) {
        if (sgn(iv_.lo) >= 0) return 1;                  // 0 <= lo < root
        if (sgn(iv_.hi) <= 0) return -1;                 // root < hi <= 0
        if (sgn(poly_.at_rat(Rat(0))) == 0) return 0;    // the root is 0 itself
        refine_once();
        if (iv_.exact) return sgn(*iv_.exact);
    }
}

int RealAlgebraic::compare(const RealAlgebraic& o) const {
    const bool ra = rat_ || iv_.exact;
    const bool rb = o.rat_ || o.iv_.exact;
    const auto val = [](const RealAlgebraic& x) { return x.rat_ ? *x.rat_ : *x.iv_.exact; };
    if (ra && rb) {
        const Rat a = val(*this), b = val(o);
        return a < b ? -1 : (a == b ? 0 : 1);
    }
    if (ra || rb) {
        // rational r against an isolated algebraic root
        const Rat r = ra ? val(*this) : val(o);
        const RealAlgebraic& alg = ra ? o : *this;
        int cmp; // r vs alg
        while (true) {
            if (r <= alg.iv_.lo) { cmp = -1; break; }
            if (r >= alg.iv_.hi) { cmp = 1; break; }
            if (sgn(alg.poly_.at_rat(r)) == 0) { cmp = 0; break; } // r is the isolated root
            alg.refine_once();
            if (alg.iv_.exact) {
                const Rat b = *alg.iv_.exact;
                cmp = r < b ? -1 : (r == b ? 0 : 1);
                break;
            }
        }
        return ra ? cmp : -cmp;
    }
    // both algebraic: equal iff a common root of gcd lies in both intervals
    const RatPoly g = poly_gcd(poly_, o.poly_);
    if (g.degree() >= 1) {
        const Rat lo = std::max(iv_.lo, o.iv_.lo), hi = std::min(iv_.hi, o.iv_.hi);
        if (lo < hi && sgn(g.at_rat(lo)) != 0 && sgn(g.at_rat(hi)) != 0 &&
            count_roots_in(g, lo, hi) >= 1)
            return 0;
    }
    // not equal (or not yet provably equal): refine until intervals disjoint,
    // rechecking the gcd criterion as the overlap shrinks
    while (true) {
        if (iv_.hi <= o.iv_.lo) return -1;
        if (o.iv_.hi <= iv_.lo) return 1;
        refine_once();
        o.refine_once();
        if (iv_.exact || o.iv_.exact) {
            // delegate to the rational-vs-algebraic branch via copies
            RealAlgebraic a = *this, b = o;
            if (a.iv_.exact) a.rat_ = *a.iv_.exact;
            if (b.iv_.exact) b.rat_ = *b.iv_.exact;
            return a.compare(b);
        }
        if (g.degree() >= 1) {
            const Rat lo = std::max(iv_.lo, o.iv_.lo), hi = std::min(iv_.hi, o.iv_.hi);
            if (lo < hi && sgn(g.at_rat(lo)) != 0 && sgn(g.at_rat(hi)) != 0 &&
                count_roots_in(g, lo, hi) >= 1)
                return 0;
        }
    }
}

int RealAlgebraic::sign_at(const RatPoly& g) const {
    if (g.is_zero()) return 0;
    if (rat_) return sgn(g.at_rat(*rat_));
    if (iv_.exact) return sgn(g.at_rat(*iv_.exact));
    const RatPoly gs = squarefree_part(g);
    // zero test: does the shared factor of poly_ and g vanish here?
    const RatPoly d = poly_gcd(poly_, gs);
    if (d.degree() >= 1) {
        RootInterval iv = iv_;
        // endpoints are non-roots of poly_, hence of d
        if (count_roots_in(d, iv.lo, iv.hi) >= 1) return 0;
    }
    // otherwise refine until g is root-free on the closure of the interval
    while (true) {
        const bool lo_ok = sgn(gs.at_rat(iv_.lo)) != 0;
        const bool hi_ok = sgn(gs.at_rat(iv_.hi)) != 0;
        if (lo_ok && hi_ok && count_roots_in(gs, iv_.lo, iv_.hi) == 0)
            return sgn(g.at_rat(iv_.lo));
        refine_once();
        if (iv_.exact) return sgn(g.at_rat(*iv_.exact));
    }
}

RealAlgebraic RealAlgebraic::affine(const Rat& u, const Rat& v) const {
    if (sgn(u) == 0) fail_math("degenerate affine map on algebraic number");
    if (rat_) return RealAlgebraic(Rat(u * *rat_ + v));
    if (iv_.exact) return RealAlgebraic(Rat(u * *iv_.exact + v));
    // y = u x + v is a root of p((y - v)/u)
    const RatPoly q = compose_affine(poly_, Rat(1 / u), Rat(-v / u));
    Rat lo = u * iv_.lo + v, hi = u * iv_.hi + v;
    if (lo > hi) std::swap(lo, hi);
    return root_of(q, lo, hi);
}

double RealAlgebraic::to_double() const {
    if (rat_) return rat_to_double(*rat_);
    refine_below(make_rat(1, Int(1) << 60));
    if (iv_.exact) return rat_to_double(*iv_.exact);
    return rat_to_double(Rat((iv_.lo + iv_.hi) / 2));
}

RealAlgebraic cos_pi(const Rat& t) {
    if (sgn(t) < 0 || t > Rat(1)) fail_math("cos_pi argument must be in [0, 1]");
    const Int p = rat_num(t), q = rat_den(t);
    if (q == 1) return RealAlgebraic(Rat(p == 0 ? 1 : -1));
    if (q == 2) return RealAlgebraic(Rat(0));
    if (q == 3) return RealAlgebraic(p == 1 ? make_rat(1, 2) : make_rat(-1, 2));
    // remaining values are irrational (Niven): isolate the root of the
    // squarefree part of T_q(x) - (-1)^p; its real roots are exactly
    // cos(pi r / q) for r = 0..q with r = p mod 2, in descending order of r
    const unsigned long qu = q.get_ui();
    const bool odd = int_mod(p, Int(2)) == 1;
    RatPoly f = chebyshev_t<Rat>(static_cast<unsigned>(qu)) -
                RatPoly::constant(Rat(odd ? -1 : 1));
    RatPoly sf = squarefree_part(f);
    auto roots = isolate_real_roots(sf);
    // index of r = p counted from the top: smaller r means larger cosine
    const unsigned long from_top = Int(p / 2).get_ui();
    if (from_top >= roots.size()) fail_math("cos_pi root indexing failed");
    const size_t idx = roots.size() - 1 - from_top;
    auto& r = roots[idx];
    if (r.exact) return RealAlgebraic(*r.exact);
    return RealAlgebraic::root_of(sf, r.lo, r.hi);
}

std::optional<Rat> invert_cos_pi(const RealAlgebraic& cosine, unsigned max_den) {
    const double x = cosine.to_double();
    for (unsigned q = 1; q <= max_den; ++q) {
        for (unsigned p = 0; p <= q; ++p) {
            if (mpz_gcd_ui(nullptr, Int(p).get_mpz_t(), q) != 1) continue;
            const double approx = std::cos(M_PI * static_cast<double>(p) / q);
            if (std::abs(approx - x) > 1e-9) continue;
            const Rat t = make_rat(static_cast<long>(p), static_cast<long>(q));
            if (cos_pi(t) == cosine) return t;
        }
    }
    return std::nullopt;
}

} // namespace etcs
