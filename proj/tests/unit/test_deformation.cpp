#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "hqdeform/config.hpp"
#include "hqdeform/deformation.hpp"
#include "hqdeform/text.hpp"

using namespace hqdeform;

namespace {

std::string failures(const Report& r) {
    std::string out;
    for (const auto& c : r.items)
        if (!c.pass) out += c.id + " [" + c.detail + "]\n";
    return out;
}

}  // namespace

TEST(Deformation, DihedralProductExamples) {
    auto st = load_fixture("dihedral-h1").structure;
    const auto& ctx = st->ctx();
    TSeries x1x2 = deformed_product(*st, parse_element(ctx, "x1"), parse_element(ctx, "x2"));
    ASSERT_EQ(x1x2.length(), 2u);
    EXPECT_EQ(x1x2.coefficient(0), parse_element(ctx, "x1*x2"));
    EXPECT_EQ(x1x2.coefficient(1), parse_element(ctx, "w[t] + w[t^3]"));
    TSeries x2x1 = deformed_product(*st, parse_element(ctx, "x2"), parse_element(ctx, "x1"));
    EXPECT_EQ(x2x1, TSeries::constant(parse_element(ctx, "x1*x2")));
    EXPECT_TRUE(infinitesimal(*st, parse_element(ctx, "x2"), parse_element(ctx, "x1")).is_zero());
    EXPECT_TRUE(infinitesimal(*st, parse_element(ctx, "1"), parse_element(ctx, "x2^3*w[s]")).is_zero());
}

TEST(Deformation, HandPickedTripleAndUnit) {
    auto st = load_fixture("dihedral-h1").structure;
    const auto& ctx = st->ctx();
    EXPECT_TRUE(check_associativity(*st, parse_element(ctx, "x1"), parse_element(ctx, "x2"), parse_element(ctx, "x1*x2")).ok());
    EXPECT_TRUE(check_unit(*st, parse_element(ctx, "x1*w[s]")).ok());
    EXPECT_TRUE(check_unit(*st, parse_element(ctx, "1")).ok());
}

TEST(Deformation, SeriesMultiplicationAgreesWithPlainProductAtDegreeZero) {
    auto st = load_fixture("cyclic-recipe").structure;
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        CrossedElement a = random_element(st->ctx(), rng, 3, 2), b = random_element(st->ctx(), rng, 3, 2);
        EXPECT_EQ(deformed_product(*st, TSeries::constant(a), TSeries::constant(b)), deformed_product(*st, a, b));
    }
}

TEST(Deformation, SuitePassesOnEveryFixture) {
    for (const auto& name : fixture_names()) {
        auto st = load_fixture(name).structure;
        auto start = std::chrono::steady_clock::now();
        Report r = deformation_suite(*st, SampleOptions{100, 42, 3});
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        EXPECT_TRUE(r.ok()) << name << "\n" << failures(r);
        EXPECT_LT(secs, 60.0) << name;
    }
}

TEST(Deformation, BrokenCocycleFailsAtDegreeZero) {
    auto j = fixture_json("cyclic-recipe");
    j["cocycle"] = {{"kind", "table"}, {"values", nlohmann::json::array()}};
    for (int g = 0; g < 6; ++g) {
        nlohmann::json row = nlohmann::json::array();
        for (int h = 0; h < 6; ++h) row.push_back(g == 1 && h == 1 ? "2" : "1");
        j["cocycle"]["values"].push_back(row);
    }
    auto st = load_config(j).structure;
    const auto& ctx = st->ctx();
    Report r = check_associativity(*st, parse_element(ctx, "w[g]"), parse_element(ctx, "w[g]"), parse_element(ctx, "w[g^4]"));
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.items.front().detail.find("t^0"), std::string::npos);
}

TEST(Deformation, CharacteristicStopsTheSeriesBeforeAVanishingFactorial) {
    // q = 1 over F_3: (3)!_q = 0, but delta2^i kills x2^r for i >= 3 before that factorial is needed.
    nlohmann::json j = fixture_json("dihedral-h1");
    j["field"] = "fp:3";
    auto st = load_config(j).structure;
    const auto& ctx = st->ctx();
    TSeries s = deformed_product(*st, parse_element(ctx, "x1^2*x2"), parse_element(ctx, "x2^5"));
    EXPECT_EQ(s.length(), 3u);
    EXPECT_TRUE(check_associativity(*st, parse_element(ctx, "x1^2"), parse_element(ctx, "x1*x2^2"), parse_element(ctx, "x2^2")).ok());
}
