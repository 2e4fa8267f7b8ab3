#include <gtest/gtest.h>

#include <random>

#include "hqdeform/linalg.hpp"

using namespace hqdeform;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

std::vector<Scalar> vec(std::initializer_list<std::int64_t> v, FieldSpec f) {
    std::vector<Scalar> out;
    for (auto x : v) out.emplace_back(x, f);
    return out;
}

Matrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows, FieldSpec f) {
    std::vector<std::vector<Scalar>> r;
    for (auto row : rows) r.push_back(vec(row, f));
    return Matrix::from_rows(r, f);
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

// Low-rank matrices show up more often when entries are products of two thin factors.
Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, FieldSpec f) {
    std::uniform_int_distribution<std::int64_t> e(-2, 2);
    std::uniform_int_distribution<std::size_t> k(1, std::max(r, c));
    const std::size_t inner = k(rng);
    Matrix u(r, inner, f), v(inner, c, f), out(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < inner; ++j) u.at(i, j) = Scalar(e(rng), f);
    for (std::size_t i = 0; i < inner; ++i)
        for (std::size_t j = 0; j < c; ++j) v.at(i, j) = Scalar(e(rng), f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t m = 0; m < inner; ++m) out.at(i, j) += u.at(i, m) * v.at(m, j);
    return out;
}

}  // namespace

TEST(Linalg, SolveExamples) {
    auto id = solve(mat({{1, 0}, {0, 1}}, Q), vec({1, 0}, Q));
    ASSERT_TRUE(std::holds_alternative<Solution>(id));
    EXPECT_EQ(std::get<Solution>(id).x, vec({1, 0}, Q));

    const Matrix dup = mat({{1}, {1}}, Q);
    const auto b = vec({1, 2}, Q);
    auto bad = solve(dup, b);
    ASSERT_TRUE(std::holds_alternative<Certificate>(bad));
    const auto& y = std::get<Certificate>(bad).y;
    EXPECT_TRUE(verify_certificate(dup, b, std::get<Certificate>(bad)));
    EXPECT_EQ(y[0], -y[1]);

    auto tri = solve(mat({{1, 1}, {0, 1}}, F7), vec({3, 5}, F7));
    ASSERT_TRUE(std::holds_alternative<Solution>(tri));
    EXPECT_EQ(std::get<Solution>(tri).x, vec({5, 5}, F7));
}

TEST(Linalg, RankExamples) {
    EXPECT_EQ(rank(Matrix(3, 4, Q)), 0u);
    EXPECT_EQ(rank(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, Q)), 3u);
    EXPECT_EQ(rank(mat({{1, 2}, {2, 4}}, Q)), 1u);
    EXPECT_EQ(rank(mat({{1, 3}, {2, 6}}, F7)), 1u);
}

TEST(Linalg, CertificateVerificationRejectsForgeries) {
    const Matrix a = mat({{1}, {1}}, Q);
    EXPECT_FALSE(verify_certificate(a, vec({1, 2}, Q), Certificate{vec({1, 1}, Q)}));
    EXPECT_FALSE(verify_certificate(a, vec({2, 2}, Q), Certificate{vec({1, -1}, Q)}));
}

TEST(Linalg, SolutionsAndCertificatesAreExact) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::uniform_int_distribution<std::int64_t> e(-3, 3);
    for (FieldSpec f : {Q, F7})
        for (int k = 0; k < 60; ++k) {
            const Matrix a = random_matrix(rng, dim(rng), dim(rng), f);
            std::vector<Scalar> b;
            for (std::size_t i = 0; i < a.rows(); ++i) b.emplace_back(e(rng), f);
            auto out = solve(a, b);
            if (auto* s = std::get_if<Solution>(&out)) EXPECT_EQ(a.apply(s->x), b);
            else EXPECT_TRUE(verify_certificate(a, b, std::get<Certificate>(out)));
        }
}

TEST(Linalg, RankOfTransposeAgrees) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> dim(1, 30);
    for (FieldSpec f : {Q, F7})
        for (int k = 0; k < 25; ++k) {
            const Matrix a = random_matrix(rng, dim(rng), dim(rng), f);
            EXPECT_EQ(rank(a), rank(transpose(a)));
        }
}
