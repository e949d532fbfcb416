#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etcs/angles.hpp"
#include "etcs/catalog.hpp"
#include "support.hpp"

using namespace etcs;
using namespace etcs::testsupport;

namespace {

RatMat rat_mat(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rat>> conv;
    for (auto& r : rows) {
        std::vector<Rat> row;
        for (long v : r) row.emplace_back(Int(v));
        conv.push_back(std::move(row));
    }
    return RatMat::from_rows(std::move(conv));
}

Configuration simple_config(std::vector<std::vector<long>> rows, size_t rp, size_t rm,
                            Rat theta = make_rat(1, 2)) {
    Configuration cfg;
    cfg.name = "test";
    cfg.rank_plus = rp;
    cfg.rank_minus = rm;
    cfg.gram = rat_mat(std::move(rows));
    cfg.theta = std::move(theta);
    return cfg;
}

} // namespace

TEST_CASE("built-in configurations reproduce their angle spectra") {
    for (const CatalogEntry& entry : entries()) {
        CAPTURE(entry.id);
        const AngleSpectrum computed = configuration_angles(entry.config);
        CHECK(same_angle_multiset(computed.alpha_plus, entry.expected_angles.alpha_plus));
        CHECK(same_angle_multiset(computed.alpha_minus, entry.expected_angles.alpha_minus));
        CHECK(computed.alpha_plus.size() == 3);
        CHECK(computed.alpha_minus.size() == 19);
    }
}

TEST_CASE("angle spectra are basis independent") {
    Rng rng(101);
    for (const CatalogEntry& entry : entries()) {
        CAPTURE(entry.id);
        for (int trial = 0; trial < 3; ++trial) {
            const Configuration moved = rebased_copy(entry.config, rng);
            const AngleSpectrum computed = configuration_angles(moved);
            CHECK(same_angle_multiset(computed.alpha_plus, entry.expected_angles.alpha_plus));
            CHECK(same_angle_multiset(computed.alpha_minus, entry.expected_angles.alpha_minus));
        }
    }
}

TEST_CASE("configuration validation") {
    Configuration ok = simple_config({{2, 2}, {2, 4}}, 1, 1, make_rat(1, 4));
    ok.k_plus = 2;
    validate_configuration(ok);

    Configuration bad = ok;
    bad.rank_minus = 0;
    CHECK_THROWS_WITH(validate_configuration(bad), "each block must have rank at least 1");

    bad = ok;
    bad.rank_minus = 2;
    CHECK_THROWS_WITH(validate_configuration(bad), "gram size must equal rank_plus + rank_minus");

    bad = ok;
    bad.gram(0, 1) = Rat(3);
    CHECK_THROWS_WITH(validate_configuration(bad), "gram must be symmetric");

    bad = ok;
    bad.gram(0, 1) = make_rat(1, 2);
    bad.gram(1, 0) = make_rat(1, 2);
    CHECK_THROWS_WITH(validate_configuration(bad), "gram entries must be integers");

    bad = ok;
    bad.k_minus = 0;
    CHECK_THROWS_WITH(validate_configuration(bad), "quotient orders must be at least 1");

    bad = ok;
    bad.theta = Rat(1);
    CHECK_THROWS_WITH(validate_configuration(bad),
                      "gluing angle must lie strictly between 0 and pi");
    bad.theta = Rat(0);
    CHECK_THROWS_WITH(validate_configuration(bad),
                      "gluing angle must lie strictly between 0 and pi");

    // blocks must individually be polarising
    bad = simple_config({{-2, 0}, {0, 2}}, 1, 1, make_rat(1, 4));
    bad.k_plus = 2;
    CHECK_THROWS_WITH(validate_configuration(bad),
                      "polarising form must have signature (1, rank-1)");
}

TEST_CASE("gluing angle set is enforced only for small quotient orders") {
    Configuration cfg = simple_config({{2, 2}, {2, 4}}, 1, 1, make_rat(1, 5));
    CHECK_THROWS_WITH(validate_configuration(cfg),
                      "gluing angle must be one of pi/6, pi/4, pi/3, pi/2, 2pi/3, 3pi/4, 5pi/6 "
                      "when both quotient orders are at most 2");
    cfg.k_plus = 3;
    validate_configuration(cfg);
}

TEST_CASE("pairing index bounds") {
    // two copies of (1,2) glued so that the mixed form gains a positive plane
    Configuration cfg = simple_config({{2, 0, 0, 0, 0, 0},
                                       {0, -2, 0, 0, 2, 2},
                                       {0, 0, -2, 0, 2, -2},
                                       {0, 0, 0, 2, 0, 0},
                                       {0, 2, 2, 0, -2, 0},
                                       {0, 2, -2, 0, 0, -2}},
                                      3, 3);
    CHECK_THROWS_WITH(validate_configuration(cfg), "positive index of the pairing exceeds 3");
}

TEST_CASE("composite isometry") {
    // orthogonal blocks: both reflections commute and the composite is -id
    const Configuration cfg = simple_config({{2, 0}, {0, -2}}, 1, 1);
    const RatMat m = composite_isometry(cfg);
    CHECK(m == RatMat::identity(2) * Rat(-1));

    // the composite preserves the pairing: M^T G M = G
    for (const CatalogEntry& entry : entries()) {
        const RatMat mm = composite_isometry(entry.config);
        CHECK(mm.transpose() * entry.config.gram * mm == entry.config.gram);
    }

    CHECK_THROWS_WITH(composite_isometry(simple_config({{2, 2}, {2, 2}}, 1, 1)),
                      "degenerate span");
}

TEST_CASE("eigenvalues off the unit circle are rejected") {
    // pairing 3 exceeds the geometric mean of the norms, so the composite
    // stretches a hyperbolic plane
    Configuration cfg = simple_config({{2, 0, 3, 0},
                                       {0, -2, 0, 0},
                                       {3, 0, 2, 0},
                                       {0, 0, 0, -2}},
                                      2, 2);
    CHECK_THROWS_AS(configuration_angles(cfg), Error);
}

TEST_CASE("projection route agrees with the reflection route") {
    Rng rng(202);
    for (const CatalogEntry& entry : entries()) {
        CAPTURE(entry.id);
        check_route_equivalence(entry.config);
        check_route_equivalence(rebased_copy(entry.config, rng));
    }
    const std::vector<Configuration> fresh = random_valid_2p2(25, 4000, rng);
    CHECK(fresh.size() == 25);
    for (const Configuration& cfg : fresh) check_route_equivalence(cfg);
}

TEST_CASE("matching compatibility") {
    for (const CatalogEntry& entry : entries()) {
        CAPTURE(entry.id);
        const MatchingCheck check = check_matching_compatibility(entry.config);
        CHECK(check.pass);
        CHECK(check.message.empty());
        CHECK(same_angle_multiset(check.spectrum.alpha_plus, check.expected));
    }

    // declared angle pi/6 but the lattice geometry realises pi/4
    Configuration lying = simple_config({{2, 2}, {2, 4}}, 1, 1, make_rat(1, 6));
    lying.k_plus = 2;
    lying.k_minus = 2;
    const MatchingCheck check = check_matching_compatibility(lying);
    CHECK_FALSE(check.pass);
    CHECK_FALSE(check.message.empty());
    CHECK_THROWS_AS(require_matching_compatibility(lying), Error);

    const Configuration honest = simple_config({{2, 2}, {2, 4}}, 1, 1, make_rat(1, 4));
    const AngleSpectrum spec = require_matching_compatibility(honest);
    CHECK(spec.alpha_plus.size() == 3);
}

TEST_CASE("orthogonal gluings have only flat angles") {
    Rng rng(303);
    for (int trial = 0; trial < 30; ++trial) {
        const Configuration cfg = random_orthogonal_config(rng);
        const AngleSpectrum spec = configuration_angles(cfg);
        for (const ExactAngle& a : spec.alpha_plus) CHECK((a.is_zero() || a.is_pi()));
        for (const ExactAngle& a : spec.alpha_minus) CHECK((a.is_zero() || a.is_pi()));
    }
}
