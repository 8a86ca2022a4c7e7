#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sadic/rational.hpp"

namespace sadic {

// Dense matrix of exact integers. Row index = target letter, column index =
// source letter for incidence matrices.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> column(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    bool is_positive() const {
        for (const auto& x : a_)
            if (x <= 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
        std::vector<Rational> out(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[i] += Rational(at(i, j)) * v[j];
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
        std::vector<Int> out(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Exact rank over the rationals by Gaussian elimination.
inline std::size_t exact_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t exact_rank(const IntMatrix& m) {
    std::vector<std::vector<Rational>> r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rational(m.at(i, j));
    return exact_rank(std::move(r));
}

// Rank of a list of column vectors.
inline std::size_t exact_rank_of_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return 0;
    std::vector<std::vector<Rational>> rows(cols[0].size(), std::vector<Rational>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != cols[0].size())
            throw std::invalid_argument("ragged column list");
        for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][i];
    }
    return exact_rank(std::move(rows));
}

// Solves A x = b exactly (A given by columns). Returns nullopt when the
// system is inconsistent. Free variables are set to 0.
inline std::optional<std::vector<Rational>> solve_exact(
    const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b) {
    std::size_t n = b.size(), k = columns.size();
    for (const auto& c : columns)
        if (c.size() != n) throw std::invalid_argument("column size mismatch");
    // augmented matrix [A | b]
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = columns[j][i];
        m[i][k] = b[i];
    }
    std::vector<std::ptrdiff_t> pivot_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < n; ++col) {
        std::size_t p = rank;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col[rank] = static_cast<std::ptrdiff_t>(col);
        ++rank;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rational> x(k, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        x[static_cast<std::size_t>(pivot_col[r])] = m[r][k] / m[r][static_cast<std::size_t>(pivot_col[r])];
    return x;
}

// Exact determinant (square matrices only).
inline Rational exact_determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != col) { std::swap(a[p], a[col]); det = -det; }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace sadic
