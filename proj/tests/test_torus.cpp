#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etcs/torus.hpp"

using namespace etcs;

namespace {

TorusFactor factor(unsigned k, Surd zeta, Surd xi) {
    TorusFactor t;
    t.k = k;
    t.zeta = std::move(zeta);
    t.xi = std::move(xi);
    return t;
}

ExactAngle frac(long p, long q) { return ExactAngle::from_pi_fraction(make_rat(p, q)); }

bool contains(const std::vector<ExactAngle>& v, const ExactAngle& a) {
    for (const ExactAngle& x : v)
        if (x == a) return true;
    return false;
}

} // namespace

TEST_CASE("factor validation") {
    validate_torus_factor(factor(2, Surd(1), Surd::sqrt2()));
    CHECK_THROWS_WITH(validate_torus_factor(factor(0, Surd(1), Surd(1))),
                      "quotient order must be at least 1");
    CHECK_THROWS_WITH(validate_torus_factor(factor(1, Surd(0), Surd(1))),
                      "torus side lengths must be positive");
    CHECK_THROWS_WITH(validate_torus_factor(factor(1, Surd(1), Surd(-1))),
                      "torus side lengths must be positive");
}

TEST_CASE("certified floor") {
    CHECK(surd_floor(Surd(make_rat(7, 2))) == Int(3));
    CHECK(surd_floor(Surd(make_rat(-7, 2))) == Int(-4));
    CHECK(surd_floor(Surd(3)) == Int(3));
    CHECK(surd_floor(Surd(-3)) == Int(-3));
    CHECK(surd_floor(Surd::sqrt2()) == Int(1));
    CHECK(surd_floor(-Surd::sqrt2()) == Int(-2));
    CHECK(surd_floor(Surd::sqrt2() + Surd::sqrt3()) == Int(3));
    CHECK(surd_floor(Surd::sqrt6()) == Int(2));
    CHECK(surd_floor(Surd(100) * Surd::sqrt2()) == Int(141));
    // exact integer surd: 1 + sqrt2 + (1 - sqrt2) = 2
    CHECK(surd_floor((Surd(1) + Surd::sqrt2()) + (Surd(1) - Surd::sqrt2())) == Int(2));
}

TEST_CASE("quotient lattice reduction") {
    // k = 1: the rectangle itself
    const PlanarLattice rect = quotient_lattice(factor(1, Surd(2), Surd(3)));
    CHECK(norm2(rect.b1) == Surd(4));
    CHECK(norm2(rect.b2) == Surd(9));
    CHECK(inner(rect.b1, rect.b2) == Surd(0));
    CHECK(sgn(det2(rect.b1, rect.b2)) > 0);

    // k = 2 with square sides: the quotient is again a square of half area
    const PlanarLattice half = quotient_lattice(factor(2, Surd(2), Surd(2)));
    CHECK(norm2(half.b1) == Surd(2));
    CHECK(norm2(half.b2) == Surd(2));
    CHECK(inner(half.b1, half.b2) == Surd(0));

    // reduction invariants on assorted factors
    const std::vector<TorusFactor> samples = {
        factor(1, Surd(1), Surd(5)),
        factor(2, Surd(3), Surd(1)),
        factor(3, Surd(2), Surd::sqrt2()),
        factor(4, Surd(5), Surd::sqrt3()),
        factor(5, Surd(1) + Surd::sqrt2(), Surd(2)),
        factor(6, Surd::sqrt6(), Surd(1)),
        factor(7, Surd(4), Surd(7)),
    };
    for (const TorusFactor& t : samples) {
        const PlanarLattice lat = quotient_lattice(t);
        const Surd n1 = norm2(lat.b1);
        const Surd n2 = norm2(lat.b2);
        const Surd ip = inner(lat.b1, lat.b2);
        CHECK(sgn(n2 - n1) >= 0);
        CHECK(sgn(ip) >= 0);
        CHECK(sgn(n1 - Surd(2) * ip) >= 0);
        // covolume is preserved: |det| = zeta xi / k
        const Surd target = t.zeta * t.xi / Surd(Rat(Int(static_cast<long>(t.k))));
        const Surd d = det2(lat.b1, lat.b2);
        CHECK((d == target || -d == target));
    }
}

TEST_CASE("matching isometries for the standard recipes") {
    const Surd c(2);

    // quarter turn: k+ = 2 square side c against k- = 1 square side c/sqrt2
    const Surd root_half = c / Surd::sqrt2();
    const std::vector<ExactAngle> quarter =
        gluing_angles(factor(2, c, c), factor(1, root_half, root_half));
    CHECK(contains(quarter, frac(1, 4)));
    CHECK(contains(quarter, frac(3, 4)));
    CHECK(quarter.size() == 2);

    // pi/6: k+ = 2 rectangle (c, c sqrt3) against k- = 2 rectangle (c sqrt3, c)
    const std::vector<ExactAngle> sixth =
        gluing_angles(factor(2, c, c * Surd::sqrt3()), factor(2, c * Surd::sqrt3(), c));
    CHECK(contains(sixth, frac(1, 6)));

    // pi/3: both k = 2 rectangles (c, c sqrt3)
    const std::vector<ExactAngle> third =
        gluing_angles(factor(2, c, c * Surd::sqrt3()), factor(2, c, c * Surd::sqrt3()));
    CHECK(contains(third, frac(1, 3)));

    // orthogonal gluing of plain rectangles: swap the side lengths
    const std::vector<ExactAngle> right =
        gluing_angles(factor(1, Surd(2), Surd(5)), factor(1, Surd(5), Surd(2)));
    CHECK(contains(right, frac(1, 2)));

    // every reported angle lies strictly between 0 and pi
    for (const auto& list : {quarter, sixth, third, right})
        for (const ExactAngle& a : list) {
            CHECK_FALSE(a.is_zero());
            CHECK(a.sign_part() > 0);
        }
}

TEST_CASE("non-matching pairs give no angles") {
    // covolume mismatch
    CHECK(gluing_angles(factor(1, Surd(1), Surd(1)), factor(1, Surd(1), Surd(3))).empty());

    // equal covolume but incommensurable shapes: unit square vs sqrt2 x 1/sqrt2
    const Surd r2 = Surd::sqrt2();
    CHECK(gluing_angles(factor(1, Surd(1), Surd(1)), factor(1, r2, Surd(1) / r2)).empty());
}

TEST_CASE("self-matching of a plain square") {
    // the only orientation-reversing isometry of the required shape with a
    // positive upper-right entry that fixes a square lattice swaps the axes
    const std::vector<ExactAngle> self =
        gluing_angles(factor(1, Surd(3), Surd(3)), factor(1, Surd(3), Surd(3)));
    CHECK(self.size() == 1);
    CHECK(contains(self, frac(1, 2)));
}

TEST_CASE("angles come back sorted and distinct") {
    const Surd c(2);
    const std::vector<ExactAngle> sixth =
        gluing_angles(factor(2, c, c * Surd::sqrt3()), factor(2, c * Surd::sqrt3(), c));
    CHECK(sixth.size() > 1);
    for (size_t i = 1; i < sixth.size(); ++i) {
        CHECK(sixth[i - 1] < sixth[i]);
    }
}
