#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <cactus/cactus.hpp>

namespace cactus::testing {

inline std::string fixture_path(const std::string& name) { return std::string(CACTUS_NETWORKS_DIR) + "/" + name; }
inline CactusNetwork fixture(const std::string& name) { return load_network(fixture_path(name)); }

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"y123.net",     "delta-1-half-third.net", "fig2-cactus.net", "parallel.net",
                                                   "series.net",   "shorted.net",            "disconnected.net"};
    return names;
}

inline Rational q(long long p, long long r = 1) { return Rational(p, r); }

inline RationalMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<RationalVector> rv;
    for (const auto& r : rows) rv.emplace_back(r);
    return RationalMatrix::from_rows(rv);
}

/// Star with center v and spokes a, b, c to b1, b2, b3.
inline CactusNetwork y_network(const Rational& a, const Rational& b, const Rational& c) {
    CactusNetwork net;
    net.n = 3;
    net.shape = {{1}, {2}, {3}};
    net.internal_vertices = {"v"};
    net.edges = {{"a", "b1", "v", a}, {"b", "b2", "v", b}, {"c", "b3", "v", c}};
    net.rotations = {{"b1", {"a"}}, {"b2", {"b"}}, {"b3", {"c"}}, {"v", {"a", "b", "c"}}};
    return net;
}

// ---------------------------------------------------------------------------
// Random planar cactus networks.

/// Uniform conductance from {p/r : 1 <= p <= 4, 1 <= r <= 3}.
inline Rational random_conductance(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 4), den(1, 3);
    const int p = num(rng);
    return Rational(p, den(rng));
}

namespace detail {

struct Corner {
    std::string vertex;  // pre-quotient owner
    int quotient_vertex;
    std::ptrdiff_t insert_at;
};

// Corners of the face containing dart b: for each dart b of the face, the
// angle between prev_cw(b) and b at its tail.
inline std::vector<Corner> face_corners(const CactusNetwork& net, const QuotientGraph& q, const std::vector<int>& face) {
    const CactusMap& m = q.map;
    std::vector<Corner> out;
    for (int b : face) {
        const int a = m.prev_cw(b);
        Corner c;
        c.quotient_vertex = m.tail[static_cast<std::size_t>(a)];
        if (m.is_arc(a)) {
            if (a % 2 != 0) continue;
            c.vertex = CactusNetwork::boundary_name(m.arc_label(a));
            c.insert_at = 0;
        } else {
            const Edge& e = net.edges[static_cast<std::size_t>(a / 2)];
            c.vertex = a % 2 == 0 ? e.u : e.v;
            const auto rot = net.rotation(c.vertex);
            c.insert_at = std::find(rot.begin(), rot.end(), e.id) - rot.begin() + 1;
        }
        out.push_back(c);
    }
    return out;
}

inline bool is_outer(const CactusMap& m, const std::vector<int>& face) {
    return std::any_of(face.begin(), face.end(), [&](int d) { return m.is_arc(d) && d % 2 == 0; });
}

// Joins two corners of one inner face by a new edge.
inline bool add_chord(CactusNetwork& net, std::mt19937& rng, int& next_id) {
    const QuotientGraph q = quotient_graph(net);
    std::vector<std::vector<Corner>> candidates;
    for (const auto& f : q.map.faces()) {
        if (is_outer(q.map, f)) continue;
        auto cs = face_corners(net, q, f);
        bool usable = false;
        for (std::size_t i = 0; i < cs.size() && !usable; ++i)
            for (std::size_t j = i + 1; j < cs.size() && !usable; ++j)
                usable = cs[i].quotient_vertex != cs[j].quotient_vertex;
        if (usable) candidates.push_back(std::move(cs));
    }
    if (candidates.empty()) return false;
    const auto& cs = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i].quotient_vertex != cs[j].quotient_vertex) pairs.emplace_back(i, j);
    const auto [i, j] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    const std::string id = "e" + std::to_string(next_id++);
    for (const Corner* c : {&cs[i], &cs[j]}) {
        auto& rot = net.rotations[c->vertex];
        rot.insert(rot.begin() + c->insert_at, id);
    }
    net.edges.push_back({id, cs[i].vertex, cs[j].vertex, random_conductance(rng)});
    return true;
}

// Puts a new internal vertex in the middle of a random edge.
inline void subdivide(CactusNetwork& net, std::mt19937& rng, int& next_id, int& next_vertex) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, net.edges.size() - 1)(rng);
    const Edge old = net.edges[k];
    const std::string w = "w" + std::to_string(next_vertex++);
    const std::string e1 = "e" + std::to_string(next_id++);
    const std::string e2 = "e" + std::to_string(next_id++);
    auto swap_token = [&](const std::string& v, const std::string& to) {
        auto& rot = net.rotations[v];
        *std::find(rot.begin(), rot.end(), old.id) = to;
    };
    swap_token(old.u, e1);
    swap_token(old.v, e2);
    net.internal_vertices.push_back(w);
    net.rotations[w] = {e1, e2};
    net.edges.erase(net.edges.begin() + static_cast<std::ptrdiff_t>(k));
    net.edges.push_back({e1, old.u, w, random_conductance(rng)});
    net.edges.push_back({e2, w, old.v, random_conductance(rng)});
}

}  // namespace detail

struct RandomNetworkOptions {
    int n = 3;
    int edges = 6;
    bool trivial_shape = true;
    double subdivide_probability = 0.3;
};

/// A valid planar cactus network built by adding chords inside faces and
/// subdividing edges. Never produces internal vertices cut off from the boundary.
inline CactusNetwork random_network(std::mt19937& rng, const RandomNetworkOptions& opt) {
    CactusNetwork net;
    net.n = opt.n;
    if (opt.trivial_shape) {
        for (int i = 1; i <= opt.n; ++i) net.shape.push_back({i});
    } else {
        const auto all = enumerate_noncrossing(opt.n);
        net.shape = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)].blocks();
    }
    int next_id = 1, next_vertex = 1;
    std::bernoulli_distribution split(opt.subdivide_probability);
    int guard = 0;
    while (static_cast<int>(net.edges.size()) < opt.edges && guard++ < 10 * opt.edges + 10) {
        if (!net.edges.empty() && split(rng) && static_cast<int>(net.edges.size()) + 1 <= opt.edges) {
            detail::subdivide(net, rng, next_id, next_vertex);
        } else if (!detail::add_chord(net, rng, next_id)) {
            if (net.edges.empty()) break;
            detail::subdivide(net, rng, next_id, next_vertex);
        }
    }
    require_valid(net);
    return net;
}

inline bool connected(const CactusNetwork& net) { return is_connected(quotient_graph(net)); }

// ---------------------------------------------------------------------------
// Oracles, computed without the library's algorithms.

inline std::vector<std::vector<int>> set_partitions_rgs(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            out.push_back(rgs);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    if (n > 0) rec(rec, 0, -1);
    return out;
}

/// True if no a < b < c < d with a ~ c, b ~ d in different classes.
inline bool labels_noncrossing(const std::vector<int>& cls) {
    const std::size_t m = cls.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c)
                for (std::size_t d = c + 1; d < m; ++d)
                    if (cls[a] == cls[c] && cls[b] == cls[d] && cls[a] != cls[b]) return false;
    return true;
}

/// Kreweras complement by search over all partitions of the tilde labels.
inline std::vector<std::vector<int>> brute_kreweras(const NoncrossingPartition& sigma) {
    const int n = sigma.n();
    std::vector<std::vector<int>> found;
    int hits = 0;
    for (const auto& t : set_partitions_rgs(n)) {
        std::vector<int> cls(static_cast<std::size_t>(2 * n));
        for (int i = 1; i <= n; ++i) {
            cls[static_cast<std::size_t>(plain_pos(i))] = sigma.block_of(i);
            cls[static_cast<std::size_t>(tilde_pos(i))] = 100 + t[static_cast<std::size_t>(i - 1)];
        }
        const int blocks = *std::max_element(t.begin(), t.end()) + 1;
        if (blocks != n + 1 - sigma.block_count() || !labels_noncrossing(cls)) continue;
        ++hits;
        found.assign(static_cast<std::size_t>(blocks), {});
        for (int i = 1; i <= n; ++i) found[static_cast<std::size_t>(t[static_cast<std::size_t>(i - 1)])].push_back(i);
    }
    if (hits != 1) throw IdentityViolation("Kreweras complement not unique");
    return found;
}

/// Grove measurements by checking every edge subset of the glued graph.
inline std::map<std::string, Rational> brute_lambda(const CactusNetwork& net) {
    const QuotientGraph g = quotient_graph(net);
    const int V = g.vertex_count();
    const std::size_t E = g.edges.size();
    std::map<std::string, Rational> out;
    for (std::uint32_t mask = 0; mask < (1u << E); ++mask) {
        std::vector<int> comp(static_cast<std::size_t>(V));
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]); };
        bool acyclic = true;
        Rational w = 1;
        for (std::size_t e = 0; e < E && acyclic; ++e) {
            if (!(mask & (1u << e))) continue;
            const int a = find(g.edges[e].u), b = find(g.edges[e].v);
            if (a == b) acyclic = false;
            else comp[static_cast<std::size_t>(a)] = b;
            w *= g.edges[e].conductance;
        }
        if (!acyclic) continue;
        std::set<int> boundary_roots;
        for (int v = 0; v < g.boundary_count; ++v) boundary_roots.insert(find(v));
        bool spans = true;
        for (int v = g.boundary_count; v < V; ++v) spans = spans && boundary_roots.count(find(v)) > 0;
        if (!spans) continue;
        std::map<int, std::vector<int>> blocks;
        for (int i = 1; i <= net.n; ++i) blocks[find(g.vertex_of_label(i))].push_back(i);
        std::vector<std::vector<int>> bl;
        for (auto& [r, b] : blocks) bl.push_back(b);
        out[NoncrossingPartition(net.n, bl).key()] += w;
    }
    return out;
}

/// Delta_{I,I~} as the sum of Lambda over Kreweras pairs concordant with it,
/// testing concordance block by block.
inline Rational brute_delta(const GroveMeasurements& lam, IndexSet s) {
    const int n = lam.n();
    Rational total = 0;
    for (std::size_t k = 0; k < lam.partitions().size(); ++k) {
        const auto& sigma = lam.partitions()[k];
        const auto tilde = brute_kreweras(sigma);
        auto meets_once = [&](const std::vector<int>& block, bool tilde_side) {
            int c = 0;
            for (int x : block) c += (s >> (tilde_side ? tilde_pos(x) : plain_pos(x))) & 1u;
            return c == 1;
        };
        bool ok = popcount(s) == n + 1;
        for (const auto& b : sigma.blocks()) ok = ok && meets_once(b, false);
        for (const auto& b : tilde) ok = ok && meets_once(b, true);
        if (ok) total += lam.at(k);
    }
    return total;
}

inline IndexSet index_set(std::initializer_list<int> plain, std::initializer_list<int> tilde) {
    IndexSet s = 0;
    for (int i : plain) s |= IndexSet{1} << plain_pos(i);
    for (int i : tilde) s |= IndexSet{1} << tilde_pos(i);
    return s;
}

inline long long catalan(int n) {
    long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

/// Symmetric matrix with zero row sums and off-diagonal entries in {0..3}/{1..2}.
inline RationalMatrix random_response_like(std::mt19937& rng, int n) {
    RationalMatrix L(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> num(0, 3), den(1, 2);
    for (std::size_t i = 0; i < L.rows(); ++i)
        for (std::size_t j = i + 1; j < L.cols(); ++j) {
            const int p = num(rng);
            L(i, j) = L(j, i) = Rational(p, den(rng));
        }
    for (std::size_t i = 0; i < L.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < L.cols(); ++j)
            if (j != i) s += L(i, j);
        L(i, i) = -s;
    }
    return L;
}

}  // namespace cactus::testing
