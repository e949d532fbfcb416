#pragma once

#include <optional>
#include <string>
#include <utility>

#include "etcs/poly.hpp"
#include "etcs/rational.hpp"

namespace etcs {

// Element of the real field Q(sqrt2, sqrt3):
//   a + b*sqrt2 + c*sqrt3 + d*sqrt6.
// All arithmetic, sign tests, and inversion are exact.
struct Surd {
    Rat a, b, c, d;

    Surd() : a(0), b(0), c(0), d(0) {}
    Surd(int v) : a(v), b(0), c(0), d(0) {}
    Surd(long v) : a(v), b(0), c(0), d(0) {}
    Surd(const Rat& v) : a(v), b(0), c(0), d(0) {}
    Surd(Rat a_, Rat b_, Rat c_, Rat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Surd sqrt2() { return Surd(Rat(0), Rat(1), Rat(0), Rat(0)); }
    static Surd sqrt3() { return Surd(Rat(0), Rat(0), Rat(1), Rat(0)); }
    static Surd sqrt6() { return Surd(Rat(0), Rat(0), Rat(0), Rat(1)); }

    bool operator==(const Surd& o) const = default;

    bool is_rational() const { return sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
    // Requires is_rational().
    Rat to_rat() const;

    // Galois conjugations: sqrt2 -> -sqrt2 and sqrt3 -> -sqrt3.
    Surd conj2() const { return Surd(a, -b, c, -d); }
    Surd conj3() const { return Surd(a, b, -c, -d); }

    // Rational interval [lo, hi] containing the value, of width <= eps.
    std::pair<Rat, Rat> enclosure(const Rat& eps) const;
    double to_double() const;
};

Surd operator+(const Surd& x, const Surd& y);
Surd operator-(const Surd& x, const Surd& y);
Surd operator-(const Surd& x);
Surd operator*(const Surd& x, const Surd& y);
Surd operator/(const Surd& x, const Surd& y);
Surd surd_inverse(const Surd& x);

int sgn(const Surd& x);
Rat abs_upper_bound(const Surd& x);
Rat abs_lower_bound(const Surd& x); // requires x != 0

std::string surd_to_string(const Surd& x);

// Parses sums of rational multiples of 1, sqrt2, sqrt3, sqrt6,
// e.g. "2", "1/2", "sqrt2", "3*sqrt2", "1+1/2*sqrt6", "sqrt3-1".
std::optional<Surd> surd_from_string(const std::string& s);

using SurdPoly = Poly<Surd>;

// Product of the four Galois conjugates of p; the result has rational
// coefficients and the same real roots as p (among others).
RatPoly norm_poly(const SurdPoly& p);

} // namespace etcs
