#include <gtest/gtest.h>

#include <random>

#include "hqdeform/crossed_product.hpp"
#include "hqdeform/config.hpp"
#include "hqdeform/text.hpp"

using namespace hqdeform;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Poly P(const std::string& text, std::size_t n = 2, FieldSpec f = Q) { return parse_poly(f, n, text); }

Poly random_poly(std::mt19937_64& rng, std::size_t n, FieldSpec f, std::uint32_t degree) {
    std::uniform_int_distribution<std::int64_t> c(-3, 3);
    Poly p(f, n);
    for (int k = 0; k < 4; ++k) p.add_term(random_monomial(n, rng, degree), Scalar(c(rng), f));
    return p;
}

LinearEndo random_endo(std::mt19937_64& rng, std::size_t n, FieldSpec f) {
    std::uniform_int_distribution<std::int64_t> c(-2, 2);
    LinearEndo m(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(c(rng), f);
    return m;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
    const Poly p = P("3*x1^2*x2 - x2");
    EXPECT_EQ(p * Poly::constant(Scalar::one(Q), 2), p);
    EXPECT_EQ(P("x1 + x2").pow(2), P("x1^2 + 2*x1*x2 + x2^2"));
    const FieldSpec f2 = FieldSpec::prime(2);
    EXPECT_EQ(P("x1 + x2", 2, f2).pow(2), P("x1^2 + x2^2", 2, f2));
    EXPECT_EQ(P("3*x1^2*x3 - x2", 3).to_string(), "3*x1^2*x3 - x2");
    EXPECT_EQ(P("x1*x2").degree(), std::optional<std::uint32_t>(2));
    EXPECT_EQ(P("0").degree(), std::nullopt);
}

TEST(Polynomial, Substitution) {
    const Poly p = P("x1^3 - 2*x2 + 5");
    EXPECT_EQ(substitute(LinearEndo::identity(2, Q), p), p);
    const LinearEndo neg = LinearEndo::diagonal({Scalar(-1, Q), Scalar(1, Q)});
    EXPECT_EQ(substitute(neg, P("x1*x2")), P("-x1*x2"));
    const LinearEndo shear = LinearEndo::from_images({P("x1 + x2"), P("x2")});
    EXPECT_EQ(substitute(shear, P("x1^2")), P("x1^2 + 2*x1*x2 + x2^2"));
}

TEST(Polynomial, SubstitutionIsMultiplicative) {
    std::mt19937_64 rng(2);
    for (FieldSpec f : {Q, FieldSpec::prime(7)})
        for (int k = 0; k < 50; ++k) {
            const LinearEndo m = random_endo(rng, 3, f);
            const Poly a = random_poly(rng, 3, f, 3), b = random_poly(rng, 3, f, 3);
            EXPECT_EQ(substitute(m, a * b), substitute(m, a) * substitute(m, b));
            EXPECT_EQ(substitute(m, a + b), substitute(m, a) + substitute(m, b));
        }
}

TEST(Polynomial, DegreesAdd) {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 100; ++k) {
        const Poly a = random_poly(rng, 3, Q, 4), b = random_poly(rng, 3, Q, 4);
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ(*(a * b).degree(), *a.degree() + *b.degree());
    }
}

TEST(Polynomial, DihedralAction) {
    const auto ctx = load_fixture("dihedral-h1").structure->ctx();
    const Group& g = ctx->group();
    EXPECT_EQ(group_act(ctx->rho(), g.parse_word("s"), P("x1*x2")), P("x1*x2"));
    EXPECT_EQ(group_act(ctx->rho(), g.parse_word("s"), P("x1")), P("-x1"));
    EXPECT_EQ(group_act(ctx->rho(), g.parse_word("t"), P("x1")), P("x1"));
    EXPECT_EQ(group_act(ctx->rho(), g.identity(), P("x1^3 + x2")), P("x1^3 + x2"));
    EXPECT_FALSE(representation_defect(g, ctx->rho()));
}

TEST(Polynomial, GroupActionIsLeftAction) {
    std::mt19937_64 rng(9);
    for (const auto& name : fixture_names()) {
        const auto ctx = load_fixture(name).structure->ctx();
        const Group& g = ctx->group();
        for (int k = 0; k < 5; ++k) {
            const Poly p = random_poly(rng, ctx->nvars(), ctx->field(), 4);
            for (GroupIndex a = 0; a < g.order(); ++a)
                for (GroupIndex b = 0; b < g.order(); ++b)
                    EXPECT_EQ(group_act(ctx->rho(), g.mul(a, b), p),
                              group_act(ctx->rho(), a, group_act(ctx->rho(), b, p)))
                        << name;
        }
    }
}

TEST(Polynomial, BrokenRepresentationHasDefect) {
    const Group d = make_dihedral(4);
    std::vector<LinearEndo> mats(d.order(), LinearEndo::identity(2, Q));
    mats[d.parse_word("s")] = LinearEndo::diagonal({Scalar(-1, Q), Scalar(1, Q)});
    EXPECT_TRUE(representation_defect(d, Representation(d, mats)));
    EXPECT_THROW(Representation::from_generators(d, {{"s", LinearEndo::identity(2, Q)},
                                                     {"t", LinearEndo::diagonal({Scalar(2, Q), Scalar(1, Q)})}},
                                                 2, Q),
                 Error);
}

TEST(Polynomial, EndomorphismAlgebra) {
    const LinearEndo m = LinearEndo::from_images({P("2*x1 + x2"), P("x1 + x2")});
    EXPECT_EQ(m.det(), Scalar(1, Q));
    auto inv = m.inverse();
    ASSERT_TRUE(inv);
    EXPECT_EQ(m.compose(*inv), LinearEndo::identity(2, Q));
    EXPECT_FALSE(LinearEndo::from_images({P("x1 + x2"), P("x1 + x2")}).inverse());
}
