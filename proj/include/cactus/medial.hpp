#pragma once

#include <map>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "network.hpp"

namespace cactus {

/// All medial strands of a network. Strand k < n joins t-points; any further
/// strands are closed loops. `crossings[e]` holds the two strands passing
/// through the midpoint of edge e.
struct MedialStrands {
    Matching pairing;
    int strand_count = 0;
    std::vector<std::pair<int, int>> crossings;
};

namespace detail {

// A strand crosses edge e between two corners. Corners come in two kinds
// relative to a dart d: "after" is (d, next_cw(d)), "before" is
// (prev_cw(d), d). Going straight through the midpoint keeps the kind.
struct StrandCursor {
    int dart;
    bool after;
};

// Follows a strand from the given cursor until it reaches a boundary arc.
// Returns the t-index where it stops and records each pass.
template <class Visit>
int follow_strand(const CactusMap& m, StrandCursor c, Visit&& visit) {
    for (int guard = 0; guard <= 4 * m.dart_count(); ++guard) {
        if (m.is_arc(c.dart)) {
            if (c.after) return 2 * m.arc_label(c.dart);              // corner (arc_out(i), x)
            return 2 * (m.arc_label(CactusMap::rev(c.dart)) % m.n + 1) - 1;  // corner (x, arc_in(i))
        }
        if (!visit(m.edge_of(c.dart), c.after)) return -1;
        const int y = CactusMap::rev(c.dart);
        c = c.after ? StrandCursor{m.next_cw(y), false} : StrandCursor{m.prev_cw(y), true};
    }
    throw InvalidInput("medial strand does not terminate");
}

}  // namespace detail

/// Traces every medial strand, open and closed.
inline MedialStrands medial_strands(const CactusNetwork& net) {
    const QuotientGraph q = quotient_graph(net);
    const CactusMap& m = q.map;
    const int n = net.n;
    const int E = m.num_edges;

    // owner[2e + after] is the strand using that side of edge e.
    std::vector<int> owner(static_cast<std::size_t>(2 * E), -1);
    int strand = 0;
    auto mark = [&](int e, bool after) {
        int& o = owner[static_cast<std::size_t>(2 * e + (after ? 1 : 0))];
        if (o == strand) return false;
        if (o != -1) throw InvalidInput("medial strands collide on edge '" + q.edges[static_cast<std::size_t>(e)].id + "'");
        o = strand;
        return true;
    };

    std::vector<int> partner(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int t = 1; t <= 2 * n; ++t) {
        if (partner[static_cast<std::size_t>(t)]) continue;
        const int i = (t + 1) / 2;
        detail::StrandCursor c = (t % 2 == 0) ? detail::StrandCursor{m.next_cw(m.arc_out(i)), false}
                                              : detail::StrandCursor{m.prev_cw(m.arc_in(i)), true};
        const int end = detail::follow_strand(m, c, mark);
        if (end < 1 || end == t || partner[static_cast<std::size_t>(end)])
            throw InvalidInput("medial strand from t" + std::to_string(t) + " does not close properly");
        partner[static_cast<std::size_t>(t)] = end;
        partner[static_cast<std::size_t>(end)] = t;
        ++strand;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int t = 1; t <= 2 * n; ++t)
        if (t < partner[static_cast<std::size_t>(t)]) pairs.emplace_back(t, partner[static_cast<std::size_t>(t)]);

    // Closed strands: every remaining side of an edge lies on one.
    for (int s = 0; s < 2 * E; ++s) {
        if (owner[static_cast<std::size_t>(s)] != -1) continue;
        const int e = s / 2;
        detail::StrandCursor c{2 * e, (s % 2) == 1};
        for (int guard = 0; guard <= 2 * E + 1; ++guard) {
            if (!mark(m.edge_of(c.dart), c.after)) break;
            const int y = CactusMap::rev(c.dart);
            c = c.after ? detail::StrandCursor{m.next_cw(y), false} : detail::StrandCursor{m.prev_cw(y), true};
            if (m.is_arc(c.dart)) throw InvalidInput("closed medial strand reached the boundary");
        }
        ++strand;
    }

    MedialStrands out{Matching(n, pairs), strand, {}};
    for (int e = 0; e < E; ++e) out.crossings.emplace_back(owner[static_cast<std::size_t>(2 * e)], owner[static_cast<std::size_t>(2 * e + 1)]);
    return out;
}

/// The matching tau on {1..2n}: t-points joined by a medial strand.
inline Matching medial_pairing(const CactusNetwork& net) { return medial_strands(net).pairing; }

/// No strand crosses itself and no two strands cross more than once.
inline bool is_minimal(const CactusNetwork& net) {
    const auto ms = medial_strands(net);
    std::map<std::pair<int, int>, int> meets;
    for (auto [a, b] : ms.crossings) {
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        if (++meets[{a, b}] > 1) return false;
    }
    return true;
}

}  // namespace cactus
