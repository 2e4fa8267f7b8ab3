#include "hqdeform/linalg.hpp"

namespace hqdeform {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, FieldSpec field) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw Error("dimension mismatch in apply");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
    return out;
}

std::vector<Scalar> Matrix::left_apply(const std::vector<Scalar>& y) const {
    if (y.size() != rows_) throw Error("dimension mismatch in left_apply");
    std::vector<Scalar> out(cols_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r) {
        if (y[r].is_zero()) continue;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[c] += y[r] * at(r, c);
    }
    return out;
}

namespace {

// Row reduction of [A | b | I] so that the identity block tracks row operations.
struct Reduction {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> pivot_cols;
};

Reduction reduce(const Matrix& a, const std::vector<Scalar>* b, bool track) {
    const FieldSpec f = a.field();
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t width = n + 1 + (track ? m : 0);
    Reduction red;
    red.rows.assign(m, std::vector<Scalar>(width, Scalar::zero(f)));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) red.rows[r][c] = a.at(r, c);
        if (b) red.rows[r][n] = (*b)[r];
        if (track) red.rows[r][n + 1 + r] = Scalar::one(f);
    }
    std::size_t pr = 0;
    for (std::size_t c = 0; c < n && pr < m; ++c) {
        std::size_t piv = pr;
        while (piv < m && red.rows[piv][c].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(red.rows[pr], red.rows[piv]);
        Scalar inv = red.rows[pr][c].inverse();
        for (auto& e : red.rows[pr])
            if (!e.is_zero()) e *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pr || red.rows[r][c].is_zero()) continue;
            Scalar factor = red.rows[r][c];
            for (std::size_t k = c; k < width; ++k)
                if (!red.rows[pr][k].is_zero()) red.rows[r][k] -= factor * red.rows[pr][k];
        }
        red.pivot_cols.push_back(c);
        ++pr;
    }
    return red;
}

}  // namespace

SolveOutcome solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw Error("dimension mismatch in solve");
    const std::size_t n = a.cols();
    Reduction red = reduce(a, &b, true);
    const std::size_t rk = red.pivot_cols.size();
    for (std::size_t r = rk; r < a.rows(); ++r) {
        if (red.rows[r][n].is_zero()) continue;
        // Row r of the tracked block is a combination y with y^T A = 0, y^T b != 0.
        Certificate cert;
        cert.y.assign(red.rows[r].begin() + static_cast<std::ptrdiff_t>(n + 1), red.rows[r].end());
        for (const auto& v : cert.y) {
            if (v.is_zero()) continue;
            Scalar inv = v.inverse();
            for (auto& e : cert.y) e *= inv;
            break;
        }
        return cert;
    }
    Solution sol;
    sol.x.assign(n, Scalar::zero(a.field()));
    for (std::size_t r = 0; r < rk; ++r) sol.x[red.pivot_cols[r]] = red.rows[r][n];
    return sol;
}

std::size_t rank(const Matrix& a) { return reduce(a, nullptr, false).pivot_cols.size(); }

bool verify_certificate(const Matrix& a, const std::vector<Scalar>& b, const Certificate& c) {
    if (c.y.size() != a.rows()) return false;
    for (const auto& v : a.left_apply(c.y))
        if (!v.is_zero()) return false;
    Scalar dot = Scalar::zero(a.field());
    for (std::size_t r = 0; r < b.size(); ++r) dot += c.y[r] * b[r];
    return !dot.is_zero();
}

}  // namespace hqdeform
