#include <gtest/gtest.h>

#include <random>

#include "hqdeform/config.hpp"
#include "hqdeform/text.hpp"

using namespace hqdeform;

namespace {

std::string failures(const Report& r) {
    std::string out;
    for (const auto& c : r.items)
        if (!c.pass) out += c.id + " [" + c.detail + "]\n";
    return out;
}

CrossedElement el(const StructurePtr& st, const std::string& text) { return parse_element(st->ctx(), text); }

}  // namespace

TEST(HqStructure, DihedralFirstStructureExamples) {
    auto st = load_fixture("dihedral-h1").structure;
    EXPECT_TRUE(st->q().is_one());
    EXPECT_EQ(st->delta(1, el(st, "x2")), el(st, "0"));
    EXPECT_EQ(st->delta(1, el(st, "x1^2")), el(st, "2*x1*w[t] + 2*x1*w[t^3]"));
    EXPECT_EQ(st->delta(2, el(st, "x2*w[s]")), el(st, "w[t^2*s]"));
    EXPECT_EQ(st->varsigma(el(st, "w[t*s]")), el(st, "-w[t*s]"));
    EXPECT_EQ(st->alpha(el(st, "x1^2*w[t]")), el(st, "x1^2*w[t]"));
    EXPECT_EQ(st->alpha(el(st, "1")), el(st, "1"));
    EXPECT_TRUE(st->omega(1) == st->lambda(1, st->data(2).front().g) * st->nu(1));
}

TEST(HqStructure, DihedralSecondStructureHasQMinusOne) {
    auto st = load_fixture("dihedral-hm1").structure;
    EXPECT_TRUE(st->q() == Scalar(-1, FieldSpec::rationals()));
    EXPECT_EQ(st->qparam().order, std::optional<std::uint64_t>(2));
    EXPECT_EQ(st->varsigma(el(st, "x2")), el(st, "-x2"));
}

TEST(HqStructure, EveryFixturePassesItsRecordedValidation) {
    for (const auto& name : fixture_names()) {
        Config cfg = load_fixture(name);
        Report r = validate_structure(*cfg.structure, cfg.mode);
        EXPECT_EQ(r.ok(), cfg.expected.value("validation", true)) << name << "\n" << failures(r);
        EXPECT_EQ(cfg.structure->q().to_string(), cfg.expected.value("q", std::string())) << name;
        Report inv = derived_invariants(*cfg.structure);
        EXPECT_TRUE(inv.ok()) << name << "\n" << failures(inv);
    }
}

TEST(HqStructure, GeneralAndSecondCaseModesAgree) {
    for (const auto& name : fixture_names()) {
        Config cfg = load_fixture(name);
        EXPECT_EQ(validate_structure(*cfg.structure, ValidationMode::General).ok(),
                  validate_structure(*cfg.structure, ValidationMode::SecondCase).ok())
            << name;
    }
}

TEST(HqStructure, ChiSigmaFlipBreaksTheSecondCovariance) {
    auto j = fixture_json("dihedral-h1");
    j["chi_sigma"]["s"] = "1";
    Report r = validate_structure(*load_config(j).structure, ValidationMode::SecondCase);
    EXPECT_TRUE(r.has_failure("cor2.item3")) << failures(r);
}

TEST(HqStructure, ShapeCriterionRejectsX1DivisibleP2) {
    auto j = fixture_json("dihedral-h1");
    j["delta2"][0]["P"] = "x1^2";
    Report r = validate_structure(*load_config(j).structure, ValidationMode::SecondCase);
    EXPECT_TRUE(r.has_failure("cor2.item5"));
    EXPECT_TRUE(r.has_failure("cor2.item5.criterion"));
}

TEST(HqStructure, SkewLeibnizAndCommutationsOnRandomElements) {
    std::mt19937_64 rng(11);
    for (const auto& name : fixture_names()) {
        auto st = load_fixture(name).structure;
        const auto& ctx = st->ctx();
        for (int k = 0; k < 15; ++k) {
            CrossedElement a = random_element(ctx, rng, 3, 3), b = random_element(ctx, rng, 3, 3);
            EXPECT_EQ(st->delta(1, a * b), st->delta(1, a) * st->varsigma(b) + st->alpha(a) * st->delta(1, b)) << name;
            EXPECT_EQ(st->delta(2, a * b), st->delta(2, a) * b + st->varsigma(st->alpha_inv(a)) * st->delta(2, b)) << name;
            EXPECT_EQ(st->delta(1, st->delta(2, a)), st->delta(2, st->delta(1, a))) << name;
            for (int i = 1; i <= 2; ++i) {
                EXPECT_EQ(st->delta(i, st->varsigma(a)), st->varsigma(st->delta(i, a)) * st->q()) << name;
                EXPECT_EQ(st->alpha(st->delta(i, a)), st->delta(i, st->alpha(a))) << name;
            }
            EXPECT_EQ(st->alpha(st->varsigma(a)), st->varsigma(st->alpha(a))) << name;
            EXPECT_EQ(st->alpha(st->alpha_inv(a)), a) << name;
        }
    }
}

TEST(HqStructure, NilpotentAtRootsOfUnity) {
    std::mt19937_64 rng(5);
    for (const auto& name : fixture_names()) {
        auto st = load_fixture(name).structure;
        if (!st->qparam().truncates()) continue;
        const auto l = static_cast<std::uint32_t>(*st->qparam().order);
        for (int k = 0; k < 10; ++k) {
            CrossedElement a = random_element(st->ctx(), rng, l + 2, 3);
            EXPECT_TRUE(st->delta_power(1, l, a).is_zero()) << name;
            EXPECT_TRUE(st->delta_power(2, l, a).is_zero()) << name;
        }
    }
}

TEST(HqStructure, ClosedPowersMatchIteration) {
    for (const auto& name : fixture_names()) {
        auto st = load_fixture(name).structure;
        ASSERT_FALSE(st->closed_form_obstruction()) << name << ": " << *st->closed_form_obstruction();
        const auto& ctx = st->ctx();
        const std::size_t n = ctx->nvars();
        std::vector<Monomial> monos{Monomial(n, 0)};
        for (std::uint32_t d = 1; d <= 3; ++d) {
            std::vector<Monomial> next;
            for (const auto& m : monos)
                if (total_degree(m) == d - 1)
                    for (std::size_t j = 0; j < n; ++j) {
                        Monomial e = m;
                        ++e[j];
                        next.push_back(e);
                    }
            monos.insert(monos.end(), next.begin(), next.end());
        }
        for (const auto& m : monos)
            for (GroupIndex g = 0; g < ctx->group().order(); g += 3)
                for (int i = 1; i <= 2; ++i)
                    for (std::uint32_t s = 0; s <= 3; ++s) {
                        CrossedElement base = CrossedElement::term(ctx, Poly::monomial(m, Scalar::one(ctx->field())), g);
                        EXPECT_EQ(st->delta_power_closed(i, s, m, g), st->delta_power(i, s, base))
                            << name << " i=" << i << " s=" << s << " g=" << ctx->group().label(g);
                    }
    }
}

TEST(HqStructure, InconsistentVarsigmaIsABuildError) {
    auto j = fixture_json("cyclic-recipe");
    j["delta2"][0]["g"] = "g^2";
    EXPECT_THROW(load_config(j), ConfigError);
}

TEST(HqStructure, ConfigErrorsNameTheField) {
    auto j = fixture_json("dihedral-h1");
    j["delta1"][1]["g"] = "r";
    try {
        load_config(j);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.field(), "delta1[1].g");
    }
}
