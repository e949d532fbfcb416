#pragma once

#include <memory>
#include <optional>
#include <string>

#include "etcs/poly.hpp"
#include "etcs/rational.hpp"
#include "etcs/surd.hpp"

namespace etcs {

// A real algebraic number, exactly represented: either a rational value, or
// a squarefree primitive integer polynomial together with an open isolating
// interval with rational non-root endpoints containing exactly one real root.
// All comparisons and sign evaluations are exact.
class RealAlgebraic {
public:
    RealAlgebraic() : rat_(Rat(0)) {}
    explicit RealAlgebraic(const Rat& r) : rat_(r) {}

    // The unique root of p in the open interval (lo, hi). p need not be
    // normalized; it is replaced by its squarefree primitive part. Errors if
    // the interval does not isolate exactly one root.
    static RealAlgebraic root_of(const RatPoly& p, const Rat& lo, const Rat& hi);

    // Embeds an element of Q(sqrt2, sqrt3).
    static RealAlgebraic from_surd(const Surd& s);

    // The unique root of the squarefree surd polynomial s isolated by iv
    // (sign-change enclosure), converted to a rational-coefficient
    // representation via the norm polynomial.
    static RealAlgebraic from_surd_poly_root(const SurdPoly& s, RootInterval iv);

    bool is_rational() const { return rat_.has_value(); }
    const Rat& rat_value() const { return *rat_; }

    // minimal-polynomial data for descriptors (rational: empty poly)
    const RatPoly& defining_poly() const { return poly_; }
    std::pair<Rat, Rat> enclosure() const;

    int sign() const;
    int compare(const RealAlgebraic& o) const;
    bool operator==(const RealAlgebraic& o) const { return compare(o) == 0; }
    bool operator<(const RealAlgebraic& o) const { return compare(o) < 0; }
    bool operator<=(const RealAlgebraic& o) const { return compare(o) <= 0; }
    bool operator>(const RealAlgebraic& o) const { return compare(o) > 0; }
    bool operator>=(const RealAlgebraic& o) const { return compare(o) >= 0; }

    // exact sign of g evaluated at this number
    int sign_at(const RatPoly& g) const;

    // u * x + v for rational u != 0, v
    RealAlgebraic affine(const Rat& u, const Rat& v) const;
    RealAlgebraic negated() const { return affine(Rat(-1), Rat(0)); }

    // shrink the enclosure below the given width
    void refine_below(const Rat& width) const;
    double to_double() const;

private:
    std::optional<Rat> rat_;
    RatPoly poly_;
    mutable RootInterval iv_{};
    mutable std::shared_ptr<const std::vector<RatPoly>> chain_;

    const std::vector<RatPoly>& chain() const;
    void refine_once() const;
};

// cos(pi * t) for rational t in [0, 1], exactly.
RealAlgebraic cos_pi(const Rat& t);

// Rational t in [0, 1] with cos(pi * t) equal to the given value and
// denominator at most max_den, if one exists.
std::optional<Rat> invert_cos_pi(const RealAlgebraic& cosine, unsigned max_den);

} // namespace etcs
