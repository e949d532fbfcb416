#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etcs/error.hpp"
#include "etcs/rational.hpp"

namespace etcs {

// Dense univariate polynomial over an exact ordered field F.
// F must provide: construction from Rat, field arithmetic, operator==,
// and ADL-visible sgn(F) -> int and abs_upper_bound(F) -> Rat.
// Coefficients are stored in ascending order with no trailing zeros.
template <class F>
struct Poly {
    std::vector<F> c;

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : c(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
    static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }

    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const F& lead() const { return c.back(); }
    F coeff(size_t i) const { return i < c.size() ? c[i] : F(0); }

    bool operator==(const Poly& o) const { return c == o.c; }

    F operator()(const F& x) const {
        F acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
    F at_rat(const Rat& q) const { return (*this)(F(q)); }
};

template <class F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
    std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly<F>(std::move(r));
}

template <class F>
Poly<F> operator-(const Poly<F>& a) {
    std::vector<F> r = a.c;
    for (auto& x : r) x = F(0) - x;
    return Poly<F>(std::move(r));
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
    return a + (-b);
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>();
    std::vector<F> r(a.c.size() + b.c.size() - 1, F(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return Poly<F>(std::move(r));
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const F& s) {
    std::vector<F> r = a.c;
    for (auto& x : r) x = x * s;
    return Poly<F>(std::move(r));
}

template <class F>
Poly<F> derivative(const Poly<F>& p) {
    if (p.c.size() <= 1) return Poly<F>();
    std::vector<F> r(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * F(Rat(static_cast<long>(i)));
    return Poly<F>(std::move(r));
}

// Exact division with remainder over the field: a = q*b + r, deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) fail_math("polynomial division by zero");
    Poly<F> r = a;
    if (r.degree() < b.degree()) return {Poly<F>(), r};
    std::vector<F> q(r.degree() - b.degree() + 1, F(0));
    const F inv_lead = F(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const size_t shift = r.degree() - b.degree();
        const F f = r.lead() * inv_lead;
        q[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = r.c[shift + i] - f * b.c[i];
        r.c.pop_back();
        r.trim();
    }
    return {Poly<F>(std::move(q)), r};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

template <class F>
Poly<F> make_monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p * F(F(1) / p.lead());
}

// Monic gcd (zero if both zero).
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

template <class F>
Poly<F> poly_pow(const Poly<F>& p, unsigned e) {
    Poly<F> r = Poly<F>::constant(F(1));
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

// Yun's squarefree decomposition: p = lead * prod factors[i].first^(factors[i].second),
// with each factor monic and squarefree, multiplicities strictly increasing.
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, unsigned>> out;
    if (p.degree() < 1) return out;
    Poly<F> f = make_monic(p);
    Poly<F> g = poly_gcd(f, derivative(f));
    Poly<F> c = divmod(f, g).first;
    Poly<F> d = divmod(derivative(f), g).first - derivative(c);
    unsigned i = 1;
    while (c.degree() >= 1) {
        Poly<F> a = poly_gcd(c, d);
        if (a.degree() >= 1) out.emplace_back(a, i);
        c = divmod(c, a).first;
        d = divmod(d, a).first - derivative(c);
        ++i;
    }
    return out;
}

// Squarefree part: product of the distinct irreducible factors, monic.
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.degree() < 1) return make_monic(p);
    Poly<F> g = poly_gcd(p, derivative(p));
    return make_monic(divmod(p, g).first);
}

// Sturm chain with positively scaled entries (leading coefficients +-1).
template <class F>
std::vector<Poly<F>> sturm_chain(const Poly<F>& p) {
    auto scale_pos = [](Poly<F> q) {
        if (q.is_zero()) return q;
        F m = q.lead();
        if (sgn(m) < 0) m = F(0) - m;
        return q * F(F(1) / m);
    };
    std::vector<Poly<F>> chain;
    chain.push_back(scale_pos(p));
    Poly<F> d = derivative(p);
    if (!d.is_zero()) chain.push_back(scale_pos(d));
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        Poly<F> r = -poly_mod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(scale_pos(r));
    }
    return chain;
}

template <class F>
int sturm_variations(const std::vector<Poly<F>>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = sgn(q.at_rat(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots in the open interval (a, b).
// Requires p(a) != 0 and p(b) != 0.
template <class F>
int count_roots_in(const std::vector<Poly<F>>& chain, const Rat& a, const Rat& b) {
    if (a >= b) return 0;
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

template <class F>
int count_roots_in(const Poly<F>& p, const Rat& a, const Rat& b) {
    if (sgn(p.at_rat(a)) == 0 || sgn(p.at_rat(b)) == 0)
        fail_math("root counting requires non-root endpoints");
    return count_roots_in(sturm_chain(p), a, b);
}

// Certified bounds on |x|, exact for rationals; the surd overloads live with
// that type.
inline Rat abs_upper_bound(const Rat& x) { return rat_abs(x); }
inline Rat abs_lower_bound(const Rat& x) {
    if (sgn(x) == 0) fail_math("lower bound of zero requested");
    return rat_abs(x);
}

// Rational B with every real root of p inside (-B, B).
template <class F>
Rat root_bound(const Poly<F>& p) {
    if (p.degree() < 1) return Rat(1);
    const Rat lead_low = abs_lower_bound(p.lead());
    Rat m(0);
    for (size_t i = 0; i + 1 < p.c.size(); ++i)
        m = std::max(m, Rat(abs_upper_bound(p.c[i]) / lead_low));
    return Rat(1) + m;
}

// One real root of a squarefree polynomial. Either known exactly as a
// rational number, or caught in an open interval (lo, hi) with
// sgn p(lo) != sgn p(hi), both nonzero, containing exactly one root.
struct RootInterval {
    std::optional<Rat> exact;
    Rat lo, hi;

    Rat inf() const { return exact ? *exact : lo; }
    Rat sup() const { return exact ? *exact : hi; }
    Rat mid() const { return exact ? *exact : Rat((lo + hi) / 2); }
    Rat width() const { return exact ? Rat(0) : Rat(hi - lo); }
};

// Halve the enclosure; may discover the root exactly.
template <class F>
void refine_root(const Poly<F>& p, RootInterval& r) {
    if (r.exact) return;
    const Rat m = r.mid();
    const int sm = sgn(p.at_rat(m));
    if (sm == 0) {
        r.exact = m;
        r.lo = r.hi = m;
        return;
    }
    if (sm == sgn(p.at_rat(r.lo)))
        r.lo = m;
    else
        r.hi = m;
}

template <class F>
void refine_root_below(const Poly<F>& p, RootInterval& r, const Rat& width) {
    while (!r.exact && r.width() >= width) refine_root(p, r);
}

namespace detail {

template <class F>
void isolate_rec(const Poly<F>& p, const std::vector<Poly<F>>& chain, const Rat& lo,
                 const Rat& hi, int count, std::vector<RootInterval>& out) {
    if (count <= 0) return;
    if (count == 1) {
        out.push_back(RootInterval{std::nullopt, lo, hi});
        return;
    }
    Rat m((lo + hi) / 2);
    if (sgn(p.at_rat(m)) == 0) {
        out.push_back(RootInterval{m, m, m});
        // shrink a punctured neighbourhood of m until it holds no other root
        Rat d((hi - lo) / 4);
        while (true) {
            const Rat a = m - d, b = m + d;
            if (sgn(p.at_rat(a)) != 0 && sgn(p.at_rat(b)) != 0 &&
                count_roots_in(chain, a, b) == 1)
                break;
            d = d / 2;
        }
        const Rat a = m - d, b = m + d;
        isolate_rec(p, chain, lo, a, count_roots_in(chain, lo, a), out);
        isolate_rec(p, chain, b, hi, count_roots_in(chain, b, hi), out);
        return;
    }
    const int left = count_roots_in(chain, lo, m);
    isolate_rec(p, chain, lo, m, left, out);
    isolate_rec(p, chain, m, hi, count - left, out);
}

} // namespace detail

// Isolating representations of all real roots of a squarefree polynomial,
// sorted ascending, with pairwise disjoint enclosures (sup_i < inf_{i+1}
// unless root i is exact, in which case sup_i may equal the exact value).
template <class F>
std::vector<RootInterval> isolate_real_roots(const Poly<F>& p) {
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;
    const auto chain = sturm_chain(p);
    Rat b = root_bound(p);
    const int total = count_roots_in(chain, -b, b);
    detail::isolate_rec(p, chain, -b, b, total, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.mid() < y.mid(); });
    // separate neighbours strictly so that midpoints between enclosures
    // are usable as root separators
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (true) {
            const Rat s = out[i].sup(), t = out[i + 1].inf();
            if (s < t) break;
            if (s == t && !out[i].exact && !out[i + 1].exact) break;
            if (!out[i].exact && out[i].width() >= out[i + 1].width())
                refine_root(p, out[i]);
            else if (!out[i + 1].exact)
                refine_root(p, out[i + 1]);
            else
                refine_root(p, out[i]);
        }
    }
    return out;
}

// Rational points strictly separating consecutive roots: for roots
// c_1 < ... < c_d returns t_1 < ... < t_{d-1} with c_i < t_i < c_{i+1}.
// Enclosures touching at a shared non-root endpoint yield that endpoint.
template <class F>
std::vector<Rat> root_separators(const Poly<F>& p, std::vector<RootInterval>& roots) {
    std::vector<Rat> seps;
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        while (roots[i].sup() > roots[i + 1].inf() ||
               (roots[i].sup() == roots[i + 1].inf() &&
                (roots[i].exact || roots[i + 1].exact))) {
            if (!roots[i].exact)
                refine_root(p, roots[i]);
            else
                refine_root(p, roots[i + 1]);
        }
        const Rat s = roots[i].sup(), t = roots[i + 1].inf();
        seps.push_back(s == t ? s : Rat((s + t) / 2));
    }
    return seps;
}

template <class F>
Poly<F> compose_affine(const Poly<F>& p, const F& u, const F& v) {
    // p(u*x + v)
    Poly<F> lin({v, u});
    Poly<F> acc;
    for (size_t i = p.c.size(); i-- > 0;)
        acc = acc * lin + Poly<F>::constant(p.c[i]);
    return acc;
}

template <class F>
Poly<F> chebyshev_t(unsigned n) {
    Poly<F> t0 = Poly<F>::constant(F(1));
    if (n == 0) return t0;
    Poly<F> t1 = Poly<F>::x();
    const Poly<F> two_x({F(0), F(2)});
    for (unsigned i = 1; i < n; ++i) {
        Poly<F> t2 = two_x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

// ---- Rational coefficient helpers ----

inline int sgn_ord(const Rat& x) { return sgn(x); }

using RatPoly = Poly<Rat>;

// Scales a nonzero rational polynomial to integer coefficients with content 1
// and positive leading coefficient.
inline RatPoly primitive_integer_poly(const RatPoly& p) {
    if (p.is_zero()) return p;
    Int l(1);
    for (const auto& a : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rat_den(a).get_mpz_t());
    Int g(0);
    std::vector<Rat> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        r[i] = p.c[i] * Rat(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rat_num(r[i]).get_mpz_t());
    }
    if (sgn(p.lead()) < 0) g = -g;
    for (auto& a : r) a = a / Rat(g);
    return RatPoly(std::move(r));
}

inline bool has_integer_coefficients(const RatPoly& p) {
    for (const auto& a : p.c)
        if (!is_integral(a)) return false;
    return true;
}

// Human-readable descending form, e.g. "x^4 - 3*x^2 + 1".
inline std::string poly_to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = p.c.size(); i-- > 0;) {
        const Rat& a = p.c[i];
        if (sgn(a) == 0) continue;
        Rat mag = rat_abs(a);
        if (out.empty())
            out += sgn(a) < 0 ? "-" : "";
        else
            out += sgn(a) < 0 ? " - " : " + ";
        const bool unit = mag == Rat(1);
        if (i == 0) {
            out += rat_to_string(mag);
        } else {
            if (!unit) out += rat_to_string(mag) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace etcs
