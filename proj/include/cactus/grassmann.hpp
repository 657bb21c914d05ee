#pragma once

#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "exterior.hpp"
#include "groves.hpp"
#include "matrix.hpp"

namespace cactus {

enum class FormKind { Omega, OmegaD };

/// Skew form on R^{2n} given by its Gram matrix.
struct SkewForm {
    FormKind kind = FormKind::Omega;
    RationalMatrix gram;
};

inline void require_n_at_least_2(int n) {
    if (n < 2) throw InvalidInput("the forms need n >= 2");
}

inline SkewForm omega(int n) {
    require_n_at_least_2(n);
    RationalMatrix g(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    auto put = [&](int a, int b, const Rational& c) {
        g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) += c;
        g(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) -= c;
    };
    for (int i = 1; i <= n; ++i) put(plain_pos(i), tilde_pos(i), 1);
    for (int j = 1; j < n; ++j) put(plain_pos(j + 1), tilde_pos(j), 1);
    put(plain_pos(1), tilde_pos(n), n % 2 == 0 ? 1 : -1);
    return {FormKind::Omega, g};
}

inline SkewForm omega_d(int n) {
    require_n_at_least_2(n);
    RationalMatrix g(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    auto put = [&](int a, int b) {
        g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) += 1;
        g(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) -= 1;
    };
    for (int i = 1; i <= n; ++i) put(plain_pos(i), tilde_pos(i));
    for (int j = 1; j <= n; ++j) put(tilde_pos(j), plain_pos(j % n + 1));
    return {FormKind::OmegaD, g};
}

/// diag with entry (-1)^(i-1) at both i and i~.
inline RationalMatrix d_matrix(int n) {
    RationalMatrix d(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    for (int p = 0; p < 2 * n; ++p) d(static_cast<std::size_t>(p), static_cast<std::size_t>(p)) = (label_of_pos(p) % 2 == 1) ? 1 : -1;
    return d;
}

/// Row-vector matrix of the shift e_1 -> (-1)^n e_n~, e_p -> e_(p-1) otherwise.
inline RationalMatrix shift(int n) {
    const auto m = static_cast<std::size_t>(2 * n);
    RationalMatrix s(m, m);
    for (std::size_t p = 1; p < m; ++p) s(p, p - 1) = 1;
    s(0, m - 1) = n % 2 == 0 ? 1 : -1;
    return s;
}

/// f_sigma: the sum of e_I over index sets concordant with (sigma, sigma~).
inline ExteriorVector f_sigma(const NoncrossingPartition& sigma) {
    ExteriorVector v(sigma.n(), sigma.n() + 1);
    for (const auto& ip : concordant_index_pairs(KrewerasPair::of(sigma))) v.add(ip.mask(), 1);
    return v;
}

/// Block vectors of the Kreweras pair, as rows: a plain block B gives
/// sum (-1)^b e_b, a tilde block sum (-1)^b e_b~.
inline RationalMatrix block_vectors(const NoncrossingPartition& sigma) {
    const auto kp = KrewerasPair::of(sigma);
    const int n = sigma.n();
    RationalMatrix m(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(2 * n));
    std::size_t r = 0;
    for (const auto& b : kp.sigma.blocks()) {
        for (int x : b) m(r, static_cast<std::size_t>(plain_pos(x))) = x % 2 == 0 ? 1 : -1;
        ++r;
    }
    for (const auto& b : kp.sigma_tilde.blocks()) {
        for (int x : b) m(r, static_cast<std::size_t>(tilde_pos(x))) = x % 2 == 0 ? 1 : -1;
        ++r;
    }
    return m;
}

/// Lam's map: sum over sigma of Lambda_sigma f_sigma.
inline ExteriorVector lam_map(const GroveMeasurements& lambda) {
    ExteriorVector v(lambda.n(), lambda.n() + 1);
    for (std::size_t k = 0; k < lambda.partitions().size(); ++k) {
        if (lambda.at(k) == 0) continue;
        v += lambda.at(k) * f_sigma(lambda.partitions()[k]);
    }
    return v;
}

/// Rows of m are pairwise orthogonal for the form.
inline bool is_isotropic(const RationalMatrix& m, const SkewForm& form) {
    if (m.cols() != form.gram.rows()) throw InvalidInput("representative and form sizes differ");
    return (m * form.gram * m.transpose()).is_zero();
}

/// All coordinates share the sign of the first nonzero one.
inline bool is_totally_nonnegative(const ExteriorVector& v) {
    if (v.is_zero()) throw PreconditionError("zero vector has no sign normalization");
    const int s = sign(v.coords().begin()->second);
    for (const auto& [idx, q] : v.coords())
        if (sign(q) != s) return false;
    return true;
}

namespace detail {

// Sign of sorting the given distinct positions into increasing order.
inline int sort_sign(std::vector<int> seq) {
    int sgn = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) sgn = -sgn;
    return sgn;
}

}  // namespace detail

/// Induced action of the shift on exterior coordinates.
inline ExteriorVector shift_exterior(const ExteriorVector& v) {
    const int n = v.n();
    const int last = 2 * n - 1;
    ExteriorVector out(n, v.degree());
    for (const auto& [s, q] : v.coords()) {
        std::vector<int> image;
        int sgn = 1;
        for (int p : positions(s)) {
            if (p == 0) {
                image.push_back(last);
                if (n % 2 == 1) sgn = -sgn;
            } else {
                image.push_back(p - 1);
            }
        }
        sgn *= detail::sort_sign(image);
        IndexSet t = 0;
        for (int p : image) t |= IndexSet{1} << p;
        out.add(t, sgn * q);
    }
    return out;
}

/// X -> X Sigma on a representative.
inline RationalMatrix cyclic_shift(const RationalMatrix& m) { return m * shift(static_cast<int>(m.cols() / 2)); }

/// The contraction by a skew form, from degree k to degree k-2, expanded on
/// basis wedges.
inline ExteriorVector kappa(const SkewForm& form, const ExteriorVector& v) {
    if (form.gram.rows() != static_cast<std::size_t>(2 * v.n())) throw InvalidInput("form and vector sizes differ");
    if (v.degree() < 2) throw InvalidInput("contraction needs degree at least 2");
    ExteriorVector out(v.n(), v.degree() - 2);
    for (const auto& [s, c] : v.coords()) {
        const auto pos = positions(s);
        for (std::size_t p = 0; p < pos.size(); ++p)
            for (std::size_t q = p + 1; q < pos.size(); ++q) {
                const Rational& w = form.gram(static_cast<std::size_t>(pos[p]), static_cast<std::size_t>(pos[q]));
                if (w == 0) continue;
                // 1-based p+q-1 equals 0-based p+q+1.
                const int sgn = ((p + q + 1) % 2 == 0) ? 1 : -1;
                const IndexSet rest = s & ~(IndexSet{1} << pos[p]) & ~(IndexSet{1} << pos[q]);
                out.add(rest, sgn * w * c);
            }
    }
    return out;
}

inline constexpr int kKappaKernelMaxN = 5;

/// dim ker of the Omega-contraction on degree n+1, by exact rank.
inline int kernel_dimension_of_kappa(int n) {
    require_n_at_least_2(n);
    if (n > kKappaKernelMaxN) throw PreconditionError("kernel dimension is capped at n = " + std::to_string(kKappaKernelMaxN));
    const SkewForm form = omega(n);
    const auto cols = subsets_of_size(2 * n, n + 1);
    const auto rows = subsets_of_size(2 * n, n - 1);
    std::map<IndexSet, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    RationalMatrix k(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        ExteriorVector e(n, n + 1);
        e.add(cols[c], 1);
        const auto image = kappa(form, e);
        for (const auto& [s, q] : image.coords()) k(row_of.at(s), c) = q;
    }
    return static_cast<int>(cols.size() - rank(k));
}

/// The two extreme coordinates: Delta_{[n],{k~}} (the not-shorted value) and
/// Delta_{{k},[n~]} (the connected value), each checked constant in k.
struct ExtremeCoordinates {
    Rational not_shorted;
    Rational connected;
};

inline IndexSet all_plain(int n) {
    IndexSet s = 0;
    for (int i = 1; i <= n; ++i) s |= IndexSet{1} << plain_pos(i);
    return s;
}
inline IndexSet all_tilde(int n) { return all_plain(n) << 1; }
inline IndexSet plain_bit(int i) { return IndexSet{1} << plain_pos(i); }
inline IndexSet tilde_bit(int i) { return IndexSet{1} << tilde_pos(i); }

inline ExtremeCoordinates extreme_coordinates(const ExteriorVector& v) {
    const int n = v.n();
    if (v.degree() != n + 1) throw InvalidInput("expected a vector of degree n+1");
    if (n >= 2 && !kappa(omega(n), v).is_zero())
        throw PreconditionError("vector is not in the kernel of the contraction");
    ExtremeCoordinates out{v[all_plain(n) | tilde_bit(1)], v[all_tilde(n) | plain_bit(1)]};
    for (int k = 2; k <= n; ++k) {
        if (v[all_plain(n) | tilde_bit(k)] != out.not_shorted)
            throw IdentityViolation("coordinates Delta_{[n],{k~}} differ at k = " + std::to_string(k));
        if (v[all_tilde(n) | plain_bit(k)] != out.connected)
            throw IdentityViolation("coordinates Delta_{{k},[n~]} differ at k = " + std::to_string(k));
    }
    return out;
}

enum class Chart { NotShorted, Connected };

namespace detail {

inline void check_zero_sums(const RationalMatrix& l) {
    if (l.rows() != l.cols() || l.rows() < 1) throw InvalidInput("expected a square matrix");
    if (!l.is_symmetric()) throw InvalidInput("matrix is not symmetric");
    if (!l.has_zero_line_sums()) throw InvalidInput("matrix rows and columns must sum to zero");
}

}  // namespace detail

/// Not-shorted chart representative for a symmetric zero-sum matrix L.
inline RationalMatrix chart_from_response(const RationalMatrix& L) {
    detail::check_zero_sums(L);
    const std::size_t n = L.rows();
    // S(j, i) for i = 1..n stored at column i-1; gauge S(j, n) = 0.
    RationalMatrix S(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = n - 1; i >= 1; --i) S(j, i - 1) = S(j, i) + L(i, j);
    RationalMatrix P(n + 1, 2 * n);
    for (std::size_t k = 0; k < n; ++k) P(0, 2 * k + 1) = 1;
    for (std::size_t j = 0; j < n; ++j) {
        P(j + 1, 2 * j) = 1;
        for (std::size_t k = 0; k < n; ++k) P(j + 1, 2 * k + 1) = S(j, k);
    }
    return P * d_matrix(static_cast<int>(n));
}

/// Connected chart representative for a symmetric zero-sum matrix L*.
inline RationalMatrix chart_from_lstar(const RationalMatrix& Ls) {
    detail::check_zero_sums(Ls);
    const std::size_t n = Ls.rows();
    // T(j, i) at column i-1; gauge T(j, 1) = 0.
    RationalMatrix T(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i + 1 < n; ++i) T(j, i + 1) = T(j, i) + Ls(i, j);
    RationalMatrix P(n + 1, 2 * n);
    for (std::size_t k = 0; k < n; ++k) P(0, 2 * k) = 1;
    for (std::size_t j = 0; j < n; ++j) {
        P(j + 1, 2 * j + 1) = 1;
        for (std::size_t k = 0; k < n; ++k) P(j + 1, 2 * k) = T(j, k);
    }
    return P * d_matrix(static_cast<int>(n));
}

/// Brings M D to the chart's normal form and reads off the symmetric matrix.
inline RationalMatrix extract_symmetric(const RationalMatrix& M, Chart chart) {
    if (M.cols() != 2 * (M.rows() - 1)) throw InvalidInput("representative must be (n+1) x 2n");
    const std::size_t n = M.rows() - 1;
    const std::size_t pivot_off = chart == Chart::NotShorted ? 0 : 1;
    const std::size_t free_off = 1 - pivot_off;
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < n; ++k) order.push_back(2 * k + pivot_off);
    for (std::size_t k = 0; k < n; ++k) order.push_back(2 * k + free_off);
    auto ef = row_reduce(M * d_matrix(static_cast<int>(n)), order);
    if (ef.pivots.size() != n + 1) throw PreconditionError("representative is rank deficient");
    for (std::size_t k = 0; k < n; ++k)
        if (ef.pivots[k] != 2 * k + pivot_off) throw PreconditionError("point is outside the chart");
    const RationalMatrix& red = ef.reduced;
    // The last row lies in the free columns only and must be constant there.
    const Rational top = red(n, free_off);
    if (top == 0) throw PreconditionError("point is outside the chart");
    for (std::size_t k = 0; k < n; ++k)
        if (red(n, 2 * k + free_off) != top) throw PreconditionError("representative is not isotropic");
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto v = [&](std::size_t col) { return red(j, 2 * col + free_off); };
            out(i, j) = chart == Chart::NotShorted ? v((i + n - 1) % n) - v(i) : v((i + 1) % n) - v(i);
        }
    if (!out.is_symmetric() || !out.has_zero_line_sums())
        throw PreconditionError("recovered matrix is not symmetric with zero sums; representative is not isotropic");
    return out;
}

/// A representative of the point with Pluecker vector p, normalized to the
/// identity on the columns of J (which must have p_J != 0).
inline RationalMatrix representative_from_plucker(const ExteriorVector& p, IndexSet J) {
    const int n = p.n();
    const int k = p.degree();
    const Rational pJ = p[J];
    if (pJ == 0) throw PreconditionError("chosen coordinate is zero");
    const auto cols = positions(J);
    RationalMatrix A(static_cast<std::size_t>(k), static_cast<std::size_t>(2 * n));
    for (std::size_t a = 0; a < cols.size(); ++a) {
        A(a, static_cast<std::size_t>(cols[a])) = 1;
        for (int c = 0; c < 2 * n; ++c) {
            if (J & (IndexSet{1} << c)) continue;
            int between = 0;
            for (int x : cols)
                if (x != cols[a] && ((x > cols[a] && x < c) || (x < cols[a] && x > c))) ++between;
            const IndexSet K = (J & ~(IndexSet{1} << cols[a])) | (IndexSet{1} << c);
            A(a, static_cast<std::size_t>(c)) = (between % 2 ? -1 : 1) * p[K] / pJ;
        }
    }
    if (!proportional(wedge_rows(A), p)) throw PreconditionError("vector is not a Pluecker vector");
    return A;
}

/// Representative using the lexicographically first nonzero coordinate.
inline RationalMatrix representative_from_plucker(const ExteriorVector& p) {
    if (p.is_zero()) throw PreconditionError("zero vector has no representative");
    return representative_from_plucker(p, p.coords().begin()->first);
}

}  // namespace cactus
