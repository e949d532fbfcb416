#include "etcs/surd.hpp"

#include <cctype>

#include "etcs/error.hpp"

namespace etcs {

namespace {

// sign of u + v*sqrt2 for rational u, v
int sgn_qsqrt2(const Rat& u, const Rat& v) {
    const int su = sgn(u), sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: decided by u^2 vs 2 v^2 (never equal for v != 0,
    // since sqrt2 is irrational)
    const int cmp = sgn(Rat(u * u - 2 * v * v));
    return su * cmp;
}

} // namespace

Rat Surd::to_rat() const {
    if (!is_rational()) fail_math("surd is not rational");
    return a;
}

Surd operator+(const Surd& x, const Surd& y) {
    return Surd(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}

Surd operator-(const Surd& x, const Surd& y) {
    return Surd(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}

Surd operator-(const Surd& x) { return Surd(-x.a, -x.b, -x.c, -x.d); }

Surd operator*(const Surd& x, const Surd& y) {
    return Surd(x.a * y.a + 2 * x.b * y.b + 3 * x.c * y.c + 6 * x.d * y.d,
                x.a * y.b + x.b * y.a + 3 * (x.c * y.d + x.d * y.c),
                x.a * y.c + x.c * y.a + 2 * (x.b * y.d + x.d * y.b),
                x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
}

int sgn(const Surd& x) {
    // write x = P + Q*sqrt3 with P = a + b*sqrt2, Q = c + d*sqrt2
    const int sp = sgn_qsqrt2(x.a, x.b);
    const int sq = sgn_qsqrt2(x.c, x.d);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: decided by P^2 vs 3 Q^2 inside Q(sqrt2); equality is
    // impossible for Q != 0 because sqrt3 is not in Q(sqrt2)
    const Rat pu = x.a * x.a + 2 * x.b * x.b, pv = 2 * x.a * x.b;
    const Rat qu = x.c * x.c + 2 * x.d * x.d, qv = 2 * x.c * x.d;
    const int cmp = sgn_qsqrt2(Rat(pu - 3 * qu), Rat(pv - 3 * qv));
    if (cmp == 0) fail_math("impossible coincidence in surd sign computation");
    return sp * cmp;
}

Surd surd_inverse(const Surd& x) {
    if (sgn(x) == 0) fail_math("division by zero surd");
    // 1/(P + Q*sqrt3) = (P - Q*sqrt3) / (P^2 - 3 Q^2), denominator in Q(sqrt2)
    const Surd conj = x.conj3();
    const Surd den = x * conj; // = P^2 - 3 Q^2, lives in Q(sqrt2)
    // now invert den = u + v*sqrt2: 1/den = (u - v*sqrt2)/(u^2 - 2 v^2)
    const Rat u = den.a, v = den.b;
    const Rat nrm = u * u - 2 * v * v;
    if (sgn(nrm) == 0) fail_math("impossible zero norm in surd inversion");
    const Surd den_inv = Surd(Rat(u / nrm), Rat(-v / nrm), Rat(0), Rat(0));
    return conj * den_inv;
}

Surd operator/(const Surd& x, const Surd& y) { return x * surd_inverse(y); }

namespace {

// floor(sqrt(n) * 2^k) as an integer, by integer square root of n * 4^k
Int sqrt_scaled(unsigned long n, unsigned k) {
    Int m(n);
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), 2 * k);
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::pair<Rat, Rat> scaled_term(const Rat& coeff, unsigned long n, unsigned k) {
    const Int f = sqrt_scaled(n, k);
    Int two_k(1);
    mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), k);
    const Rat lo = make_rat(f, two_k), hi = make_rat(Int(f + 1), two_k);
    if (sgn(coeff) >= 0) return {coeff * lo, coeff * hi};
    return {coeff * hi, coeff * lo};
}

} // namespace

std::pair<Rat, Rat> Surd::enclosure(const Rat& eps) const {
    if (sgn(eps) <= 0) fail_math("enclosure width must be positive");
    const Rat spread = rat_abs(b) + rat_abs(c) + rat_abs(d);
    unsigned k = 2;
    if (sgn(spread) != 0) {
        // width <= spread / 2^k; grow k until below eps
        Rat w = spread / 4;
        while (w > eps) {
            ++k;
            w = w / 2;
        }
    }
    auto [lo2, hi2] = scaled_term(b, 2, k);
    auto [lo3, hi3] = scaled_term(c, 3, k);
    auto [lo6, hi6] = scaled_term(d, 6, k);
    return {Rat(a + lo2 + lo3 + lo6), Rat(a + hi2 + hi3 + hi6)};
}

double Surd::to_double() const {
    auto [lo, hi] = enclosure(make_rat(1, Int(1) << 60));
    return rat_to_double(Rat((lo + hi) / 2));
}

Rat abs_upper_bound(const Surd& x) {
    auto [lo, hi] = x.enclosure(Rat(1));
    return std::max(rat_abs(lo), rat_abs(hi));
}

Rat abs_lower_bound(const Surd& x) {
    const int s = sgn(x);
    if (s == 0) fail_math("lower bound of zero requested");
    Rat eps(1);
    while (true) {
        auto [lo, hi] = x.enclosure(eps);
        if (s > 0 && sgn(lo) > 0) return lo;
        if (s < 0 && sgn(hi) < 0) return rat_abs(hi);
        eps = eps / 4;
    }
}

std::string surd_to_string(const Surd& x) {
    std::string out;
    auto append = [&out](const Rat& coeff, const char* root) {
        if (sgn(coeff) == 0) return;
        std::string term;
        Rat c = coeff;
        if (!out.empty()) {
            out += sgn(c) > 0 ? " + " : " - ";
            c = rat_abs(c);
        }
        if (root == nullptr) {
            term = rat_to_string(c);
        } else if (c == Rat(1)) {
            term = root;
        } else if (c == Rat(-1)) {
            term = std::string("-") + root;
        } else {
            term = rat_to_string(c) + "*" + root;
        }
        out += term;
    };
    append(x.a, nullptr);
    append(x.b, "sqrt2");
    append(x.c, "sqrt3");
    append(x.d, "sqrt6");
    return out.empty() ? "0" : out;
}

std::optional<Surd> surd_from_string(const std::string& s) {
    // grammar: [+-] term ([+-] term)*, term = rat ['*' root] | root,
    // root in {sqrt2, sqrt3, sqrt6}
    size_t i = 0;
    const auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    Surd total;
    bool any = false;
    skip_ws();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            return std::nullopt; // terms must be separated by +/-
        }
        Rat coeff(1);
        bool have_coeff = false;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
            size_t j = i;
            while (j < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
                ++j;
            auto r = rat_from_string(s.substr(i, j - i));
            if (!r) return std::nullopt;
            coeff = *r;
            i = j;
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        Surd root(Rat(1));
        bool have_root = false;
        if (i + 4 < s.size() + 1 && s.compare(i, 4, "sqrt") == 0 && i + 4 < s.size()) {
            const char which = s[i + 4];
            if (which == '2')
                root = Surd::sqrt2();
            else if (which == '3')
                root = Surd::sqrt3();
            else if (which == '6')
                root = Surd::sqrt6();
            else
                return std::nullopt;
            i += 5;
            have_root = true;
            skip_ws();
        }
        if (!have_coeff && !have_root) return std::nullopt;
        total = total + root * Surd(Rat(sign * coeff));
        any = true;
        skip_ws();
    }
    if (!any) return std::nullopt;
    return total;
}

RatPoly norm_poly(const SurdPoly& p) {
    if (p.is_zero()) return RatPoly();
    auto apply = [](const SurdPoly& q, Surd (Surd::*f)() const) {
        std::vector<Surd> cs = q.c;
        for (auto& x : cs) x = (x.*f)();
        return SurdPoly(std::move(cs));
    };
    const SurdPoly p2 = apply(p, &Surd::conj2);
    const SurdPoly p3 = apply(p, &Surd::conj3);
    const SurdPoly p23 = apply(p2, &Surd::conj3);
    const SurdPoly prod = p * p2 * p3 * p23;
    std::vector<Rat> out(prod.c.size());
    for (size_t i = 0; i < prod.c.size(); ++i) {
        if (!prod.c[i].is_rational())
            fail_math("norm polynomial has irrational coefficient");
        out[i] = prod.c[i].a;
    }
    return RatPoly(std::move(out));
}

} // namespace etcs
