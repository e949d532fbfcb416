#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etcs/algebraic.hpp"
#include "etcs/rational.hpp"

namespace etcs {

// An angle in (-pi, pi], held exactly as the pair (cos, sign).
// sign is 0 exactly for the two fixed points 0 and pi of negation;
// otherwise it is the sign of the angle. Two angles are equal iff both
// components agree.
class ExactAngle {
public:
    ExactAngle() : cos_(Rat(1)), sgn_(0) {}

    static ExactAngle zero() { return ExactAngle(); }
    static ExactAngle pi();
    // angle = pi * t for any rational t, reduced mod 2 into (-1, 1]
    static ExactAngle from_pi_fraction(const Rat& t);
    // requires |cos| <= 1; s must be 0 iff cos is +-1
    static ExactAngle from_cos_and_sign(RealAlgebraic cosine, int s);

    const RealAlgebraic& cosine() const { return cos_; }
    int sign_part() const { return sgn_; }
    bool is_zero() const { return sgn_ == 0 && cos_.is_rational() && cos_.rat_value() == Rat(1); }
    bool is_pi() const { return sgn_ == 0 && cos_.is_rational() && cos_.rat_value() == Rat(-1); }

    ExactAngle negated() const;

    bool operator==(const ExactAngle& o) const {
        return sgn_ == o.sgn_ && cos_ == o.cos_;
    }
    // orders by angle value in (-pi, pi]
    bool operator<(const ExactAngle& o) const;

    // t with angle == pi * t, if the angle is a rational multiple of pi
    // with denominator at most max_den
    std::optional<Rat> as_pi_fraction(unsigned max_den = 24) const;

    double approx_radians() const;

    // "0", "pi", "pi/2", "-2pi/3", or a minimal-polynomial descriptor
    std::string to_string() const;

private:
    ExactAngle(RealAlgebraic c, int s) : cos_(std::move(c)), sgn_(s) {}

    RealAlgebraic cos_;
    int sgn_;
};

// Text form of an angle multiset, run-length compressed, e.g.
// "{pi/2, -pi/2, 0 x17}". Angles are shown by descending magnitude,
// positive before negative at equal magnitude.
std::string render_angle_multiset(std::vector<ExactAngle> angles);

// sorts ascending by value
void sort_angles(std::vector<ExactAngle>& angles);

// exact multiset equality
bool same_angle_multiset(std::vector<ExactAngle> a, std::vector<ExactAngle> b);

} // namespace etcs
