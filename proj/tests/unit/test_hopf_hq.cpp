#include <gtest/gtest.h>

#include "hqdeform/hopf_hq.hpp"

using namespace hqdeform;

namespace {

QParam qp(std::int64_t q, FieldSpec f) { return QParam::from(Scalar(q, f)); }

void expect_all_pass(const Report& r) {
    for (const auto& c : r.items) EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
}

}  // namespace

TEST(HopfHq, ProductRule) {
    HqAlgebra h(qp(3, FieldSpec::prime(7)));
    // D1 sigma = q sigma D1
    auto lhs = h.mul(h.d1(), h.sigma(1));
    auto rhs = h.basis({1, 1, 0});
    rhs *= Scalar(3, h.field());
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(h.mul(h.d1(), h.d2()), h.mul(h.d2(), h.d1()));
}

TEST(HopfHq, CoproductOfD1SquaredMatchesHandComputation) {
    const FieldSpec q_field = FieldSpec::rationals();
    HqAlgebra h(qp(1, q_field));
    HqTensor expect = tensor(h.basis({0, 2, 0}), h.basis({2, 0, 0}));
    HqTensor mid = tensor(h.d1(), h.basis({1, 1, 0}));
    mid *= Scalar(2, q_field);  // 1 + q at q = 1
    expect += mid;
    expect += tensor(h.basis({}), h.basis({0, 2, 0}));
    EXPECT_EQ(h.coproduct(h.basis({0, 2, 0})), expect);
}

TEST(HopfHq, ClosedFormCoproductPowers) {
    for (auto [p, q] : std::vector<std::pair<std::uint32_t, std::int64_t>>{{0, 1}, {0, -1}, {7, 2}, {13, 5}, {13, 3}, {101, 7}}) {
        FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
        HqAlgebra h(qp(q, f));
        for (std::uint32_t m = 0; m <= 5; ++m)
            EXPECT_EQ(h.coproduct(h.basis({0, m, 0})), h.coproduct_d1_power_closed(m)) << "p=" << p << " m=" << m;
    }
}

TEST(HopfHq, AxiomsHoldOnSmallBasis) {
    for (auto [p, q] : std::vector<std::pair<std::uint32_t, std::int64_t>>{{0, 1}, {0, -1}, {7, 2}, {13, 5}, {13, 3}}) {
        FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
        HqAlgebra h(qp(q, f));
        expect_all_pass(verify_hopf_axioms(h, 2));
        expect_all_pass(verify_twisting(h, expq(h, 6), 6, 1));
    }
}

TEST(HopfHq, ExpqHasOrderManyTermsAtRootOfUnity) {
    HqAlgebra h(qp(2, FieldSpec::prime(7)));
    EXPECT_EQ(expq(h, 10).size(), 3u);
    HqAlgebra g(qp(1, FieldSpec::rationals()));
    EXPECT_EQ(expq(g, 6).size(), 7u);
}

TEST(HopfHq, ExpqRejectsVanishingFactorial) {
    HqAlgebra h(qp(1, FieldSpec::prime(5)));
    EXPECT_THROW(expq(h, 6), Error);
}

TEST(HopfHq, CorruptedAntipodeIsDetected) {
    QParam q = qp(-1, FieldSpec::rationals());
    HqConstants c = HqConstants::standard(q.q);
    c.antipode_d1 *= Scalar(-1, q.q.field());
    HqAlgebra h(q, c);
    EXPECT_TRUE(verify_hopf_axioms(h, 1).has_failure("hopf.antipode"));
}

TEST(HopfHq, ScaledSecondTwistTermFailsAtOrderTwo) {
    HqAlgebra h(qp(1, FieldSpec::rationals()));
    TwistSeries f = expq(h, 4);
    f[1] *= Scalar(2, h.field());
    Report r = verify_twisting(h, f, 4, 1);
    ASSERT_TRUE(r.has_failure("twist.cocycle"));
    for (const auto& c : r.items)
        if (c.id == "twist.cocycle") EXPECT_EQ(c.detail, "order t^2");
}
