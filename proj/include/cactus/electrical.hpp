#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "network.hpp"

namespace cactus {

/// Weighted Laplacian of the glued graph: degree (total conductance) on the
/// diagonal, minus the summed conductance between distinct vertices off it.
/// Loops contribute nothing.
inline RationalMatrix laplacian(const QuotientGraph& g) {
    const auto V = static_cast<std::size_t>(g.vertex_count());
    RationalMatrix lap(V, V);
    for (const auto& e : g.edges) {
        if (e.loop) continue;
        const auto u = static_cast<std::size_t>(e.u);
        const auto v = static_cast<std::size_t>(e.v);
        lap(u, u) += e.conductance;
        lap(v, v) += e.conductance;
        lap(u, v) -= e.conductance;
        lap(v, u) -= e.conductance;
    }
    return lap;
}

/// Minus the Schur complement of the Laplacian onto the boundary vertices
/// (one per shape block). Negative diagonal, nonnegative off-diagonal.
inline RationalMatrix response_matrix(const QuotientGraph& g) {
    const RationalMatrix lap = laplacian(g);
    const auto nb = static_cast<std::size_t>(g.boundary_count);
    const auto V = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::size_t> B(nb), I;
    for (std::size_t k = 0; k < nb; ++k) B[k] = k;
    for (std::size_t k = nb; k < V; ++k) I.push_back(k);

    RationalMatrix L = -lap.select(B, B);
    if (I.empty()) return L;
    const RationalMatrix lii = lap.select(I, I);
    const RationalMatrix lib = lap.select(I, B);
    const RationalMatrix lbi = lap.select(B, I);
    // X = Lii^{-1} Lib, column by column.
    RationalMatrix X(I.size(), nb);
    for (std::size_t c = 0; c < nb; ++c) {
        RationalVector col(I.size());
        for (std::size_t r = 0; r < I.size(); ++r) col[r] = lib(r, c);
        auto sol = solve_linear(lii, col);
        if (!sol.consistent || !sol.nullspace.empty())
            throw PreconditionError("interior block of the Laplacian is singular: some internal vertex is cut off from the boundary");
        for (std::size_t r = 0; r < I.size(); ++r) X(r, c) = sol.solution[r];
    }
    return L + lbi * X;
}

inline RationalMatrix response_matrix(const CactusNetwork& net) { return response_matrix(quotient_graph(net)); }

inline bool is_connected(const QuotientGraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    int comps = g.vertex_count();
    for (const auto& e : g.edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --comps;
        }
    }
    return comps == 1;
}

/// Effective resistance between boundary labels (n x n). Labels glued into the
/// same block are at resistance 0.
inline RationalMatrix resistance_matrix(const QuotientGraph& g) {
    if (!is_connected(g)) throw PreconditionError("effective resistance needs a connected network");
    const RationalMatrix L = response_matrix(g);
    const auto nb = static_cast<std::size_t>(g.boundary_count);
    // Between blocks u < v.
    RationalMatrix rb(nb, nb);
    for (std::size_t u = 0; u < nb; ++u)
        for (std::size_t v = u + 1; v < nb; ++v) {
            RationalVector rhs(nb);
            rhs[u] = 1;
            rhs[v] = -1;
            auto sol = solve_linear(L, rhs);
            if (!sol.consistent) throw IdentityViolation("unit current between boundary vertices has no potential");
            // Gauge V(u) = 0.
            const Rational r = sol.solution[v] - sol.solution[u];
            rb(u, v) = rb(v, u) = r;
        }
    const auto n = static_cast<std::size_t>(g.n);
    RationalMatrix R(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            R(i, j) = rb(static_cast<std::size_t>(g.vertex_of_label(static_cast<int>(i) + 1)),
                         static_cast<std::size_t>(g.vertex_of_label(static_cast<int>(j) + 1)));
    return R;
}

inline RationalMatrix resistance_matrix(const CactusNetwork& net) { return resistance_matrix(quotient_graph(net)); }

/// Response matrix of the dual network expressed through the resistances,
/// indices taken mod n. Diagonal fixed by zero row sums.
inline RationalMatrix lstar_from_resistance(const RationalMatrix& R) {
    if (R.rows() != R.cols()) throw InvalidInput("resistance matrix must be square");
    const std::size_t n = R.rows();
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::size_t i1 = (i + 1) % n, j1 = (j + 1) % n;
            out(i, j) = (R(i, j) + R(i1, j1) - R(i1, j) - R(i, j1)) / 2;
            row += out(i, j);
        }
        out(i, i) = -row;
    }
    return out;
}

}  // namespace cactus
