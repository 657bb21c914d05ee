#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "network.hpp"
#include "rational.hpp"

namespace cactus {

inline constexpr int kDefaultGroveEdgeCap = 20;

/// A grove, as the sorted list of its edge ids.
struct Grove {
    std::vector<std::string> edges;

    friend bool operator==(const Grove&, const Grove&) = default;
    friend bool operator<(const Grove& a, const Grove& b) { return a.edges < b.edges; }
};

/// Grove measurements: one value per noncrossing partition, stored in
/// canonical order (see enumerate_noncrossing).
class GroveMeasurements {
public:
    GroveMeasurements() = default;
    explicit GroveMeasurements(int n) : n_(n), partitions_(enumerate_noncrossing(n)), values_(partitions_.size()) {}

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<NoncrossingPartition>& partitions() const { return partitions_; }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

    [[nodiscard]] std::size_t index_of(const NoncrossingPartition& sigma) const {
        for (std::size_t k = 0; k < partitions_.size(); ++k)
            if (partitions_[k] == sigma) return k;
        throw InvalidInput("partition " + sigma.key() + " has the wrong size");
    }

    [[nodiscard]] const Rational& operator[](const NoncrossingPartition& sigma) const { return values_[index_of(sigma)]; }
    Rational& operator[](const NoncrossingPartition& sigma) { return values_[index_of(sigma)]; }
    Rational& at(std::size_t k) { return values_[k]; }
    [[nodiscard]] const Rational& at(std::size_t k) const { return values_[k]; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
    }

private:
    int n_ = 0;
    std::vector<NoncrossingPartition> partitions_;
    std::vector<Rational> values_;
};

namespace detail {

// Union-find with an undo log, for depth-first grove search.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    [[nodiscard]] int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        log_.push_back(b);
        return true;
    }
    void undo() {
        int b = log_.back();
        log_.pop_back();
        int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> log_;
};

inline NoncrossingPartition partition_from_components(const QuotientGraph& q, const RollbackDsu& dsu) {
    std::vector<int> labels(static_cast<std::size_t>(q.n));
    for (int i = 1; i <= q.n; ++i) labels[static_cast<std::size_t>(i - 1)] = dsu.find(q.vertex_of_label(i));
    try {
        return NoncrossingPartition::from_labels(labels);
    } catch (const InvalidInput& ex) {
        throw IdentityViolation(std::string("grove partition is crossing; embedding is inconsistent: ") + ex.what());
    }
}

// Calls visit(chosen edge indices into q.edges, dsu) for every grove.
template <class Visit>
void for_each_grove(const QuotientGraph& q, Visit&& visit, int cap) {
    std::vector<int> order;
    for (std::size_t k = 0; k < q.edges.size(); ++k)
        if (!q.edges[k].loop) order.push_back(static_cast<int>(k));
    if (static_cast<int>(q.edges.size()) > cap)
        throw PreconditionError("grove enumeration is capped at " + std::to_string(cap) + " edges (network has " +
                                std::to_string(q.edges.size()) + ")");
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return q.edges[static_cast<std::size_t>(a)].id < q.edges[static_cast<std::size_t>(b)].id; });

    RollbackDsu dsu(q.vertex_count());
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            for (int v = q.boundary_count; v < q.vertex_count(); ++v) {
                const int r = dsu.find(v);
                bool anchored = false;
                for (int b = 0; b < q.boundary_count && !anchored; ++b) anchored = dsu.find(b) == r;
                if (!anchored) return;
            }
            visit(chosen, dsu);
            return;
        }
        const auto& e = q.edges[static_cast<std::size_t>(order[k])];
        if (dsu.unite(e.u, e.v)) {
            chosen.push_back(order[k]);
            self(self, k + 1);
            chosen.pop_back();
            dsu.undo();
        }
        self(self, k + 1);
    };
    rec(rec, 0);
}

}  // namespace detail

/// Every grove of the glued graph, ordered lexicographically by sorted edge ids.
inline std::vector<Grove> enumerate_groves(const CactusNetwork& net, int cap = kDefaultGroveEdgeCap) {
    const QuotientGraph q = quotient_graph(net);
    std::vector<Grove> out;
    detail::for_each_grove(
        q,
        [&](const std::vector<int>& chosen, const detail::RollbackDsu&) {
            Grove g;
            for (int k : chosen) g.edges.push_back(q.edges[static_cast<std::size_t>(k)].id);
            std::sort(g.edges.begin(), g.edges.end());
            out.push_back(std::move(g));
        },
        cap);
    std::sort(out.begin(), out.end());
    return out;
}

/// Boundary connectivity of a grove. Throws PreconditionError if F is not a grove.
inline NoncrossingPartition grove_partition(const CactusNetwork& net, const Grove& grove) {
    const QuotientGraph q = quotient_graph(net);
    detail::RollbackDsu dsu(q.vertex_count());
    for (const auto& id : grove.edges) {
        auto it = std::find_if(q.edges.begin(), q.edges.end(), [&](const QuotientEdge& e) { return e.id == id; });
        if (it == q.edges.end()) throw InvalidInput("no edge '" + id + "'");
        if (it->loop || !dsu.unite(it->u, it->v)) throw PreconditionError("edge set contains a cycle");
    }
    for (int v = q.boundary_count; v < q.vertex_count(); ++v) {
        bool anchored = false;
        for (int b = 0; b < q.boundary_count && !anchored; ++b) anchored = dsu.find(b) == dsu.find(v);
        if (!anchored) throw PreconditionError("vertex '" + q.vertex_names[static_cast<std::size_t>(v)] + "' is cut off from the boundary");
    }
    return detail::partition_from_components(q, dsu);
}

/// Lambda_sigma = sum over groves F with sigma(F) = sigma of the product of conductances.
inline GroveMeasurements lambda_vector(const CactusNetwork& net, int cap = kDefaultGroveEdgeCap) {
    const QuotientGraph q = quotient_graph(net);
    GroveMeasurements lam(net.n);
    detail::for_each_grove(
        q,
        [&](const std::vector<int>& chosen, const detail::RollbackDsu& dsu) {
            Rational w = 1;
            for (int k : chosen) w *= q.edges[static_cast<std::size_t>(k)].conductance;
            lam[detail::partition_from_components(q, dsu)] += w;
        },
        cap);
    return lam;
}

/// Positive q with a = q * b, if one exists. Both vectors must be nonzero.
inline std::optional<Rational> proportionality_factor(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw InvalidInput("vectors have different lengths");
    std::optional<Rational> q;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if ((a[k] == 0) != (b[k] == 0)) return std::nullopt;
        if (a[k] == 0) continue;
        Rational r = a[k] / b[k];
        if (!q) q = r;
        else if (*q != r) return std::nullopt;
    }
    if (!q) throw PreconditionError("zero vector has no proportionality class");
    return q;
}

struct Equivalence {
    bool equivalent = false;
    Rational factor;  ///< Lambda(net1) = factor * Lambda(net2) when equivalent
};

inline Equivalence electrically_equivalent(const CactusNetwork& a, const CactusNetwork& b,
                                           int cap = kDefaultGroveEdgeCap) {
    if (a.n != b.n) throw PreconditionError("networks have different numbers of boundary vertices");
    const auto la = lambda_vector(a, cap);
    const auto lb = lambda_vector(b, cap);
    if (la.is_zero() || lb.is_zero()) throw PreconditionError("degenerate network with all grove measurements zero");
    auto q = proportionality_factor(la.values(), lb.values());
    if (!q || *q <= 0) return {false, 0};
    return {true, *q};
}

}  // namespace cactus
