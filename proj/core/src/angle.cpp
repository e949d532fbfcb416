#include "etcs/angle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "etcs/error.hpp"

namespace etcs {

ExactAngle ExactAngle::pi() { return ExactAngle(RealAlgebraic(Rat(-1)), 0); }

ExactAngle ExactAngle::from_pi_fraction(const Rat& t) {
    // reduce t mod 2 into (-1, 1]
    Rat r = t - 2 * Rat(rat_floor(Rat(t / 2)));
    if (r > Rat(1)) r = r - 2;
    if (sgn(r) == 0) return zero();
    if (r == Rat(1)) return pi();
    const int s = sgn(r);
    return ExactAngle(cos_pi(rat_abs(r)), s);
}

ExactAngle ExactAngle::from_cos_and_sign(RealAlgebraic cosine, int s) {
    const RealAlgebraic one(Rat(1)), minus_one(Rat(-1));
    if (cosine > one || cosine < minus_one)
        fail_math("cosine outside [-1, 1]");
    if (cosine == one) {
        if (s != 0) fail_math("angle 0 must carry sign 0");
        return zero();
    }
    if (cosine == minus_one) {
        if (s != 0) fail_math("angle pi must carry sign 0");
        return pi();
    }
    if (s != 1 && s != -1) fail_math("interior angle must carry sign +-1");
    return ExactAngle(std::move(cosine), s);
}

ExactAngle ExactAngle::negated() const { return ExactAngle(cos_, -sgn_); }

bool ExactAngle::operator<(const ExactAngle& o) const {
    // ranks: negative angles, 0, positive angles, pi
    auto rank = [](const ExactAngle& a) {
        if (a.sgn_ < 0) return 0;
        if (a.is_zero()) return 1;
        if (a.sgn_ > 0) return 2;
        return 3; // pi
    };
    const int ra = rank(*this), rb = rank(o);
    if (ra != rb) return ra < rb;
    if (ra == 1 || ra == 3) return false; // equal singletons
    // within negatives: value = -acos(cos), increasing in cos;
    // within positives: value = acos(cos), decreasing in cos
    const int c = cos_.compare(o.cos_);
    return ra == 0 ? c < 0 : c > 0;
}

std::optional<Rat> ExactAngle::as_pi_fraction(unsigned max_den) const {
    if (is_zero()) return Rat(0);
    if (is_pi()) return Rat(1);
    auto t = invert_cos_pi(cos_, max_den);
    if (!t) return std::nullopt;
    return Rat(*t * sgn_);
}

double ExactAngle::approx_radians() const {
    cos_.refine_below(make_rat(1, Int(1) << 72));
    double c = cos_.to_double();
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    const double theta = std::acos(c);
    return sgn_ == 0 ? theta : sgn_ * theta;
}

std::string ExactAngle::to_string() const {
    if (is_zero()) return "0";
    if (is_pi()) return "pi";
    if (auto t = as_pi_fraction()) {
        const Int p = rat_num(*t), q = rat_den(*t);
        std::string num = p == 1 ? "pi" : (p == -1 ? "-pi" : p.get_str() + "pi");
        if (q == 1) return num;
        return num + "/" + q.get_str();
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", approx_radians());
    return std::string(sgn_ < 0 ? "-" : "") + "acos[" + poly_to_string(cos_.defining_poly()) +
           ", ~" + std::to_string(cos_.to_double()) + "] ~= " + buf;
}

void sort_angles(std::vector<ExactAngle>& angles) {
    std::sort(angles.begin(), angles.end(),
              [](const ExactAngle& a, const ExactAngle& b) { return a < b; });
}

bool same_angle_multiset(std::vector<ExactAngle> a, std::vector<ExactAngle> b) {
    if (a.size() != b.size()) return false;
    sort_angles(a);
    sort_angles(b);
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string render_angle_multiset(std::vector<ExactAngle> angles) {
    // descending magnitude, +phi before -phi: {pi, ...}, {pi/2, -pi/2, 0 x17}
    std::sort(angles.begin(), angles.end(), [](const ExactAngle& a, const ExactAngle& b) {
        const int c = a.cosine().compare(b.cosine());
        if (c != 0) return c < 0;
        return a.sign_part() > b.sign_part();
    });
    std::string out = "{";
    size_t i = 0;
    bool first = true;
    while (i < angles.size()) {
        size_t j = i;
        while (j < angles.size() && angles[j] == angles[i]) ++j;
        if (!first) out += ", ";
        first = false;
        out += angles[i].to_string();
        if (j - i > 1) out += " x" + std::to_string(j - i);
        i = j;
    }
    return out + "}";
}

} // namespace etcs
