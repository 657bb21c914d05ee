#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cactus {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows) {
        RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw InvalidInput("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] RationalVector row(std::size_t r) const {
        return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    [[nodiscard]] RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Submatrix with the given row and column index lists (in that order).
    [[nodiscard]] RationalMatrix select(const std::vector<std::size_t>& row_idx,
                                       const std::vector<std::size_t>& col_idx) const {
        RationalMatrix s(row_idx.size(), col_idx.size());
        for (std::size_t r = 0; r < row_idx.size(); ++r)
            for (std::size_t c = 0; c < col_idx.size(); ++c) s(r, c) = (*this)(row_idx[r], col_idx[c]);
        return s;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
    }

    [[nodiscard]] bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    /// Every row and every column sums to zero.
    [[nodiscard]] bool has_zero_line_sums() const {
        for (std::size_t r = 0; r < rows_; ++r) {
            Rational s = 0;
            for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c);
            if (s != 0) return false;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            Rational s = 0;
            for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
            if (s != 0) return false;
        }
        return true;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
        RationalMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend RationalMatrix operator-(const RationalMatrix& a) {
        RationalMatrix n = a;
        for (auto& q : n.data_) q = -q;
        return n;
    }

    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + (-b); }

    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) {
        for (auto& q : a.data_) q *= s;
        return a;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
    if (a.cols() != x.size()) throw InvalidInput("matrix-vector dimension mismatch");
    RationalVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

/// Determinant by Bareiss fraction-free elimination. Each row is first scaled
/// to integers by the lcm of its denominators, the integer determinant is
/// computed with exact divisions, and the scales are divided out again.
inline Rational determinant(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);

    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c) {
            const Integer d = denominator(a(r, c));
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        scale *= l;
        for (std::size_t c = 0; c < n; ++c) m[r][c] = numerator(a(r, c)) * (l / denominator(a(r, c)));
    }

    int sgn = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(m[k], m[p]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return Rational(m[n - 1][n - 1] * sgn, scale);
}

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination over the rationals. Columns are scanned in the
/// order given by `column_order` (default: natural order).
inline EchelonForm row_reduce(RationalMatrix m, std::optional<std::vector<std::size_t>> column_order = {}) {
    std::vector<std::size_t> order;
    if (column_order) {
        order = *column_order;
    } else {
        order.resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) order[c] = c;
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col : order) {
        if (row == m.rows()) break;
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = 1 / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(row, c) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& a) { return row_reduce(a).pivots.size(); }

/// Outcome of solving A x = b exactly.
struct LinearSolution {
    bool consistent = false;
    RationalVector solution;                ///< particular solution (free variables set to 0)
    std::vector<RationalVector> nullspace;  ///< basis of ker A
    RationalVector certificate;             ///< y with yᵀA = 0 and yᵀb != 0, when inconsistent
};

inline LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (b.size() != a.rows()) throw InvalidInput("right-hand side has wrong length");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // [A | b | I] tracks the row operations so an inconsistency certificate can be read off.
    RationalMatrix aug(m, n + 1 + m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
        aug(r, n + 1 + r) = 1;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t c = 0; c < n; ++c) order[c] = c;
    auto ef = row_reduce(std::move(aug), order);
    const auto& red = ef.reduced;

    LinearSolution out;
    for (std::size_t r = ef.pivots.size(); r < m; ++r) {
        if (red(r, n) != 0) {
            out.certificate.resize(m);
            for (std::size_t c = 0; c < m; ++c) out.certificate[c] = red(r, n + 1 + c);
            return out;
        }
    }
    out.consistent = true;
    out.solution.assign(n, Rational(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        out.solution[ef.pivots[r]] = red(r, n);
        is_pivot[ef.pivots[r]] = true;
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -red(r, f);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

}  // namespace cactus
