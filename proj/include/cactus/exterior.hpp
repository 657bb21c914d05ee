#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace cactus {

/// Lexicographic order on sorted index sets: the set owning the smallest
/// element of the symmetric difference comes first.
struct LexLess {
    bool operator()(IndexSet a, IndexSet b) const {
        const IndexSet d = a ^ b;
        return d != 0 && (a & (d & (~d + 1))) != 0;
    }
};

/// Coordinates on the basis e_I of the k-th exterior power of R^{2n}, with
/// each e_I the wedge of its elements in ground order. Zero coordinates are
/// not stored.
class ExteriorVector {
public:
    using Coords = std::map<IndexSet, Rational, LexLess>;

    ExteriorVector() = default;
    ExteriorVector(int n, int degree) : n_(n), degree_(degree) {}

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const Coords& coords() const { return coords_; }

    [[nodiscard]] Rational operator[](IndexSet s) const {
        auto it = coords_.find(s);
        return it == coords_.end() ? Rational(0) : it->second;
    }

    void add(IndexSet s, const Rational& q) {
        if (popcount(s) != degree_) throw InvalidInput("index set of wrong size for degree " + std::to_string(degree_));
        if (q == 0) return;
        auto [it, fresh] = coords_.emplace(s, q);
        if (!fresh) {
            it->second += q;
            if (it->second == 0) coords_.erase(it);
        }
    }

    [[nodiscard]] bool is_zero() const { return coords_.empty(); }

    ExteriorVector& operator+=(const ExteriorVector& o) {
        check_same_space(o);
        for (const auto& [s, q] : o.coords_) add(s, q);
        return *this;
    }
    friend ExteriorVector operator+(ExteriorVector a, const ExteriorVector& b) { return a += b; }
    friend ExteriorVector operator*(const Rational& c, const ExteriorVector& v) {
        ExteriorVector out(v.n_, v.degree_);
        if (c == 0) return out;
        for (const auto& [s, q] : v.coords_) out.coords_.emplace(s, c * q);
        return out;
    }
    friend ExteriorVector operator-(const ExteriorVector& a, const ExteriorVector& b) { return a + Rational(-1) * b; }
    friend bool operator==(const ExteriorVector& a, const ExteriorVector& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
    }

    void check_same_space(const ExteriorVector& o) const {
        if (n_ != o.n_ || degree_ != o.degree_) throw InvalidInput("exterior vectors live in different spaces");
    }

private:
    int n_ = 0;
    int degree_ = 0;
    Coords coords_;
};

/// All k-subsets of {0..m-1} in lexicographic order.
inline std::vector<IndexSet> subsets_of_size(int m, int k) {
    std::vector<IndexSet> out;
    for (IndexSet s = 0; s < (IndexSet{1} << m); ++s)
        if (popcount(s) == k) out.push_back(s);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

/// Maximal minors of a k x 2n matrix; the zero vector when rank < k.
inline ExteriorVector wedge_rows(const RationalMatrix& m) {
    if (m.cols() % 2 != 0) throw InvalidInput("matrix must have an even number of columns");
    const int n = static_cast<int>(m.cols() / 2);
    const int k = static_cast<int>(m.rows());
    ExteriorVector v(n, k);
    std::vector<std::size_t> rows(static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    for (IndexSet s : subsets_of_size(2 * n, k)) {
        std::vector<std::size_t> cols;
        for (int p : positions(s)) cols.push_back(static_cast<std::size_t>(p));
        v.add(s, determinant(m.select(rows, cols)));
    }
    return v;
}

/// Pluecker coordinates of the row span of a full-rank (n+1) x 2n matrix.
inline ExteriorVector plucker(const RationalMatrix& m) {
    if (m.cols() != 2 * (m.rows() - 1)) throw InvalidInput("representative must be (n+1) x 2n");
    if (rank(m) != m.rows()) throw PreconditionError("representative is rank deficient");
    return wedge_rows(m);
}

/// Positive or negative q with a = q * b, if any. Neither may be zero.
inline std::optional<Rational> scalar_ratio(const ExteriorVector& a, const ExteriorVector& b) {
    a.check_same_space(b);
    if (a.is_zero() || b.is_zero()) throw PreconditionError("zero vector has no projective class");
    if (a.coords().size() != b.coords().size()) return std::nullopt;
    std::optional<Rational> q;
    for (const auto& [s, x] : a.coords()) {
        const Rational y = b[s];
        if (y == 0) return std::nullopt;
        const Rational r = x / y;
        if (!q) q = r;
        else if (*q != r) return std::nullopt;
    }
    return q;
}

inline bool proportional(const ExteriorVector& a, const ExteriorVector& b) { return scalar_ratio(a, b).has_value(); }

/// Proportional with a positive factor.
inline bool positively_proportional(const ExteriorVector& a, const ExteriorVector& b) {
    auto q = scalar_ratio(a, b);
    return q && *q > 0;
}

}  // namespace cactus
