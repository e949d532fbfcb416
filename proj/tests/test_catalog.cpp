#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "etcs/catalog.hpp"
#include "etcs/nu.hpp"

using namespace etcs;

TEST_CASE("the seven built-in entries are present") {
    const std::set<std::string> want = {"ex_3_6",  "ex_3_7",   "ex_3_8",  "ex_3_10",
                                        "ex_3_11", "rect_b74", "rect_b86"};
    std::set<std::string> have;
    for (const CatalogEntry& entry : entries()) have.insert(entry.id);
    CHECK(have == want);
    CHECK(entries().size() == 7);
}

TEST_CASE("entry lookup") {
    const CatalogEntry* entry = find_entry("ex_3_10");
    REQUIRE(entry != nullptr);
    CHECK(entry->id == "ex_3_10");
    CHECK(find_entry("nonsense") == nullptr);
    CHECK(find_entry("") == nullptr);
}

TEST_CASE("stored data is internally consistent") {
    for (const CatalogEntry& entry : entries()) {
        CAPTURE(entry.id);
        validate_configuration(entry.config);
        validate_invariants(entry.manifold);

        // expected nu mod 48 is the stored nu_bar reduced with b1 = 0
        CHECK(entry.expected_nu_mod_48 == nu_mod_48(entry.expected_nu_bar, Int(0), true));
        // both quotient orders at most 2 force divisibility by 3
        CHECK(entry.config.k_plus <= 2);
        CHECK(entry.config.k_minus <= 2);
        CHECK(int_mod(entry.expected_nu_bar, Int(3)) == 0);
        // the expected spectra have the fixed slot counts
        CHECK(entry.expected_angles.alpha_plus.size() == 3);
        CHECK(entry.expected_angles.alpha_minus.size() == 19);
        // stored manifold record carries the same nu_bar
        REQUIRE(entry.manifold.nu_bar.has_value());
        CHECK(*entry.manifold.nu_bar == Rat(entry.expected_nu_bar));
        CHECK(entry.manifold.b1 == Int(0));
        CHECK_FALSE(entry.citation.empty());
    }
}

TEST_CASE("specific stored grams") {
    const CatalogEntry* e7 = find_entry("ex_3_7");
    REQUIRE(e7 != nullptr);
    const RatMat& g7 = e7->config.gram;
    REQUIRE(g7.n == 4);
    const long rows7[4][4] = {{2, 0, 2, 1}, {0, -2, 0, 1}, {2, 0, 4, 2}, {1, 1, 2, 0}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK(g7(i, j) == Rat(Int(rows7[i][j])));

    const CatalogEntry* e11 = find_entry("ex_3_11");
    REQUIRE(e11 != nullptr);
    const RatMat& g11 = e11->config.gram;
    REQUIRE(g11.n == 4);
    const long rows11[4][4] = {{2, 0, 2, 1}, {0, -2, 1, 2}, {2, 1, 2, 0}, {1, 2, 0, -2}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK(g11(i, j) == Rat(Int(rows11[i][j])));

    const CatalogEntry* e6 = find_entry("ex_3_6");
    REQUIRE(e6 != nullptr);
    CHECK(e6->config.theta == make_rat(1, 4));
    CHECK(e6->config.k_plus == 2);
    CHECK(e6->config.k_minus == 1);
    CHECK(e6->manifold.b3 == Int(134));
    CHECK(e6->manifold.div_p1 == Int(48));
}

TEST_CASE("verification passes on all entries") {
    const std::vector<VerifyReport> reports = verify_all();
    CHECK(reports.size() == 7);
    for (const VerifyReport& report : reports) {
        CAPTURE(report.id);
        CAPTURE(report.message);
        CHECK(report.pass);
        CHECK(report.message == "ok");
    }
}

TEST_CASE("verification fails on tampered data") {
    const CatalogEntry* base = find_entry("ex_3_6");
    REQUIRE(base != nullptr);

    // a different lattice realises a different rotation angle
    CatalogEntry tampered = *base;
    tampered.config.gram(1, 1) = Rat(6);
    const VerifyReport wrong_gram = verify_entry(tampered);
    CHECK_FALSE(wrong_gram.pass);
    CHECK(wrong_gram.message.find("alpha") != std::string::npos);

    // wrong expected nu_bar with intact geometry
    tampered = *base;
    tampered.expected_nu_bar = Int(-42);
    const VerifyReport wrong_nu = verify_entry(tampered);
    CHECK_FALSE(wrong_nu.pass);
    CHECK(wrong_nu.message.find("nu_bar") != std::string::npos);

    // broken configuration data is reported, not thrown
    tampered = *base;
    tampered.config.rank_minus = 3;
    const VerifyReport broken = verify_entry(tampered);
    CHECK_FALSE(broken.pass);
    CHECK_FALSE(broken.message.empty());
}

TEST_CASE("filtered verification") {
    CHECK(verify_all(std::vector<std::string>{}).empty());

    const std::vector<VerifyReport> one = verify_all(std::vector<std::string>{"rect_b74"});
    REQUIRE(one.size() == 1);
    CHECK(one[0].id == "rect_b74");
    CHECK(one[0].pass);

    CHECK(verify_all(std::vector<std::string>{"bogus"}).empty());

    const std::vector<VerifyReport> two = verify_all(std::vector<std::string>{"ex_3_8", "ex_3_10"});
    CHECK(two.size() == 2);
}

TEST_CASE("closed-form reference value") {
    CHECK(berger_identity() == Rat(1));
}
