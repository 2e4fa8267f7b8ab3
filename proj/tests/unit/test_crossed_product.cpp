#include <gtest/gtest.h>

#include <random>

#include "hqdeform/config.hpp"
#include "hqdeform/text.hpp"

using namespace hqdeform;

namespace {

ContextPtr dihedral() { return load_fixture("dihedral-h1").structure->ctx(); }

CrossedElement el(const ContextPtr& ctx, const std::string& text) { return parse_element(ctx, text); }

}  // namespace

TEST(CrossedProduct, MultiplicationExamples) {
    const auto ctx = dihedral();
    const auto a = el(ctx, "x1^2*w[t] - 3*w[t*s]");
    EXPECT_EQ(a * CrossedElement::one(ctx), a);
    EXPECT_EQ(el(ctx, "x1*w[s]") * el(ctx, "x2*w[t]"), el(ctx, "-x1*x2*w[t^3*s]"));

    const FieldSpec f = FieldSpec::rationals();
    const Scalar xi(5, f);
    auto c2 = std::make_shared<const AlgebraContext>(
        f, 1, make_cyclic(2), cocycle_xi(2, xi),
        Representation(make_cyclic(2), {LinearEndo::identity(1, f), LinearEndo::identity(1, f)}));
    EXPECT_EQ(el(c2, "w[g]") * el(c2, "w[g]"), CrossedElement::scalar(c2, xi));
}

TEST(CrossedProduct, Commutators) {
    const auto ctx = dihedral();
    const auto a = el(ctx, "x1*w[t] + x2^2");
    EXPECT_TRUE(commutator(a, a).is_zero());
    EXPECT_EQ(commutator(el(ctx, "w[s]"), el(ctx, "x1")), el(ctx, "-2*x1*w[s]"));
    const auto p = el(ctx, "x1^2 + x2");
    EXPECT_EQ(commutator(el(ctx, "w[s]"), p), el(ctx, "-2*x2*w[s]"));
}

TEST(CrossedProduct, Components) {
    const auto ctx = dihedral();
    const Group& g = ctx->group();
    const auto a = el(ctx, "(x1 + 2)*w[t]");
    EXPECT_EQ(a.component(g.parse_word("t")), parse_poly(ctx->field(), 2, "x1 + 2"));
    EXPECT_TRUE(a.component(g.parse_word("s")).is_zero());
    const auto b = el(ctx, "w[t] + w[t^3]");
    ASSERT_EQ(b.components().size(), 2u);
    EXPECT_TRUE(b.components().count(g.parse_word("t")));
    EXPECT_TRUE(b.components().count(g.parse_word("t^3")));
    EXPECT_EQ(el(ctx, "x1*x2^3*w[s]").degree(), std::optional<std::uint32_t>(4));
}

TEST(CrossedProduct, ParserExamples) {
    const auto ctx = dihedral();
    EXPECT_EQ(el(ctx, "w[e]"), CrossedElement::one(ctx));
    const auto two = el(ctx, "x1^2*w[t] - 3*w[t*s]");
    EXPECT_EQ(two.components().size(), 2u);
    EXPECT_EQ(el(ctx, format_element(two)), two);
    EXPECT_EQ(el(ctx, "x1*w[t*t*t*t]"), el(ctx, "x1*w[e]"));
    EXPECT_EQ(el(ctx, "(x1^2 + 2*x2)*w[t*s] + x1*w[e]"), el(ctx, "x1^2*w[t*s] + 2*x2*w[t*s] + x1"));
    EXPECT_THROW(el(ctx, "x1*w[r]"), Error);
    EXPECT_THROW(el(ctx, "x3"), Error);
    EXPECT_THROW(el(ctx, "x1 +* x2"), Error);
}

TEST(CrossedProduct, FormatRoundTrip) {
    std::mt19937_64 rng(17);
    for (const auto& name : fixture_names()) {
        const auto ctx = load_fixture(name).structure->ctx();
        for (int k = 0; k < 200; ++k) {
            const auto a = random_element(ctx, rng, 4, 5);
            EXPECT_EQ(el(ctx, format_element(a)), a) << name << ": " << format_element(a);
        }
    }
}

TEST(CrossedProduct, AssociativeAndUnital) {
    std::mt19937_64 rng(23);
    for (const auto& name : fixture_names()) {
        const auto ctx = load_fixture(name).structure->ctx();
        const auto one = CrossedElement::one(ctx);
        for (int k = 0; k < 40; ++k) {
            const auto a = random_element(ctx, rng, 3, 3), b = random_element(ctx, rng, 3, 3),
                       c = random_element(ctx, rng, 3, 3);
            EXPECT_EQ((a * b) * c, a * (b * c)) << name;
            EXPECT_EQ(a * (b + c), a * b + a * c) << name;
            EXPECT_EQ(one * a, a) << name;
        }
    }
}

TEST(CrossedProduct, RandomSamplingIsDeterministic) {
    const auto ctx = dihedral();
    std::mt19937_64 r1(99), r2(99);
    for (int k = 0; k < 20; ++k) EXPECT_EQ(random_element(ctx, r1, 3, 4), random_element(ctx, r2, 3, 4));
}
