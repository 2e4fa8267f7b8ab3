#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hqdeform/scalar.hpp"

namespace hqdeform {

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, FieldSpec field);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, FieldSpec field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
    // y^T A
    std::vector<Scalar> left_apply(const std::vector<Scalar>& y) const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

struct Solution {
    std::vector<Scalar> x;
};

// y with y^T A = 0 and y^T b != 0.
struct Certificate {
    std::vector<Scalar> y;
};

using SolveOutcome = std::variant<Solution, Certificate>;

SolveOutcome solve(const Matrix& a, const std::vector<Scalar>& b);
std::size_t rank(const Matrix& a);

// Re-checks a certificate against the system it claims to refute.
bool verify_certificate(const Matrix& a, const std::vector<Scalar>& b, const Certificate& c);

}  // namespace hqdeform
