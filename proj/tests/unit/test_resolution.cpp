#include <gtest/gtest.h>

#include <chrono>

#include "hqdeform/config.hpp"
#include "hqdeform/resolution.hpp"
#include "hqdeform/text.hpp"

using namespace hqdeform;

namespace {

std::string failures(const Report& r) {
    std::string out;
    for (const auto& c : r.items)
        if (!c.pass) out += c.id + " [" + c.detail + "]\n";
    return out;
}

ContextPtr dihedral() { return load_fixture("dihedral-h1").structure->ctx(); }

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

CrossedElement el(const ContextPtr& ctx, const std::string& s) { return parse_element(ctx, s); }

}  // namespace

TEST(Resolution, BoundaryAndHomotopyOnY) {
    const FieldSpec q = FieldSpec::rationals();
    const YElement v1 = YElement::basis(q, mono({0, 0}), mono({0, 0}), {0});
    EXPECT_EQ(y_boundary(v1), YElement::basis(q, mono({0, 0}), mono({1, 0}), {}));
    EXPECT_EQ(y_homotopy(YElement::basis(q, mono({0, 0}), mono({1, 0}), {})), v1);
    EXPECT_TRUE(y_homotopy(YElement::basis(q, mono({0, 0}), mono({1, 0}), {0})).is_zero());

    const YElement e = YElement::basis(q, mono({0, 0}), mono({2, 0}), {1});
    EXPECT_EQ(y_boundary(y_homotopy(e)) + y_homotopy(y_boundary(e)), e);
}

TEST(Resolution, WedgeSortSign) {
    Wedge w{2, 0, 1};
    EXPECT_EQ(wedge_sort(w), 1);
    EXPECT_EQ(w, (Wedge{0, 1, 2}));
    Wedge u{1, 0};
    EXPECT_EQ(wedge_sort(u), -1);
    Wedge z{1, 1};
    EXPECT_EQ(wedge_sort(z), 0);
}

TEST(Resolution, LowDegreeDifferentials) {
    const auto ctx = dihedral();
    Resolution res(ctx);
    const GroupIndex t = ctx->group().parse_word("t");

    // d1(1 # g # 1) = w_g # 1 - 1 # w_g
    XElement expect(ctx);
    expect += XElement::basis(ctx, {}, {}).left_mul(el(ctx, "w[t]"));
    expect -= XElement::basis(ctx, {}, {}).right_mul(el(ctx, "w[t]"));
    EXPECT_EQ(res.d1(XElement::basis(ctx, {t}, {})), expect);

    // d0(1 # vbar1 # 1) = 1 # x1 - x1 # 1
    XElement d0 = XElement::basis(ctx, {}, {}).right_mul(el(ctx, "x1")) - XElement::basis(ctx, {}, {}).left_mul(el(ctx, "x1"));
    EXPECT_EQ(res.d0(XElement::basis(ctx, {}, {0})), d0);
}

TEST(Resolution, TwistedLastTermCarriesTheEigenvalue) {
    const auto ctx = load_fixture("cyclic-recipe").structure->ctx();
    Resolution res(ctx);
    const GroupIndex g = ctx->group().parse_word("g");
    // ^g x1 = 3 x1 over F_7, s = r = 1.
    XElement expect = XElement::basis(ctx, {}, {0}).left_mul(el(ctx, "w[g]"));
    expect -= XElement::basis(ctx, {}, {0}).right_mul(el(ctx, "3*w[g]"));
    EXPECT_EQ(res.d1(XElement::basis(ctx, {g}, {0})), expect);
}

TEST(Resolution, Sigma0OnZLevelAndSignBySBar) {
    const auto ctx = dihedral();
    Resolution res(ctx);
    const GroupIndex t = ctx->group().parse_word("t"), s = ctx->group().parse_word("s");
    const XElement x1 = XElement::basis(ctx, {t}, {}).right_mul(el(ctx, "x1"));
    const XElement x2 = XElement::basis(ctx, {t, s}, {}).right_mul(el(ctx, "x1"));
    EXPECT_EQ(res.sigma0(res.mu(XElement::basis(ctx, {t, s}, {}))), XElement::basis(ctx, {t, s}, {}));
    EXPECT_EQ(res.sigma0(x1), XElement::basis(ctx, {t}, {0}) * Scalar(-1, ctx->field()));
    EXPECT_EQ(res.sigma0(x2), XElement::basis(ctx, {t, s}, {0}));
}

TEST(Resolution, StarShuffleExamples) {
    const auto ctx = dihedral();
    Resolution res(ctx);
    const FieldSpec f = ctx->field();
    const GroupIndex s = ctx->group().parse_word("s"), t = ctx->group().parse_word("t");
    const Poly x1 = Poly::variable(0, 2, f), x2 = Poly::variable(1, 2, f);
    const auto w = [&](GroupIndex g) { return CrossedElement::w(ctx, g); };
    const auto p = [&](const Poly& q) { return CrossedElement::poly(ctx, q); };

    EXPECT_EQ(res.star({}, {x1, x2}), BarElement::tensor(ctx, {p(x1), p(x2)}));
    // ^s x1 = -x1
    EXPECT_EQ(res.star({s}, {x1}), BarElement::tensor(ctx, {w(s), p(x1)}) + BarElement::tensor(ctx, {p(x1), w(s)}));
    BarElement two = BarElement::tensor(ctx, {w(t), w(s), p(x1)}) + BarElement::tensor(ctx, {w(t), p(x1), w(s)});
    two -= BarElement::tensor(ctx, {p(x1), w(t), w(s)});
    EXPECT_EQ(res.star({t, s}, {x1}), two);
}

TEST(Resolution, ThetaExamples) {
    const auto ctx = dihedral();
    Resolution res(ctx);
    const FieldSpec f = ctx->field();
    const GroupIndex t = ctx->group().parse_word("t");
    const auto one = CrossedElement::one(ctx);
    const auto x1 = el(ctx, "x1"), x2 = el(ctx, "x2");
    EXPECT_EQ(res.theta_closed(XElement::basis(ctx, {}, {})), BarElement::tensor(ctx, {one, one}));
    EXPECT_EQ(res.theta_closed(XElement::basis(ctx, {}, {0, 1})),
              BarElement::tensor(ctx, {one, x1, x2, one}) - BarElement::tensor(ctx, {one, x2, x1, one}));
    BarElement mixed = BarElement::tensor(ctx, {one, x1, el(ctx, "w[t]"), one}) -
                       BarElement::tensor(ctx, {one, el(ctx, "w[t]"), x1, one});
    EXPECT_EQ(res.theta_closed(XElement::basis(ctx, {t}, {0})), mixed);
    EXPECT_EQ(res.theta_recursive(XElement::basis(ctx, {t}, {0})), mixed);
    (void)f;
}

TEST(Resolution, BarDifferentialInDegreeOne) {
    const auto ctx = dihedral();
    const auto a = el(ctx, "x1*w[s]"), b = el(ctx, "x2 + w[t]"), c = el(ctx, "x1^2");
    EXPECT_EQ(bar_differential(BarElement::tensor(ctx, {a, b, c})),
              BarElement::tensor(ctx, {a * b, c}) - BarElement::tensor(ctx, {a, b * c}));
}

TEST(Resolution, AllIdentitiesHoldOnEveryFixture) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : fixture_names()) {
        const Report r = resolution_check(load_fixture(name).structure->ctx(), 3);
        EXPECT_TRUE(r.ok()) << name << "\n" << failures(r);
        EXPECT_GE(r.items.size(), 11u) << name;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(secs, 120.0);
}
