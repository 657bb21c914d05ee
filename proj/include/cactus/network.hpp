#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace cactus {

struct Edge {
    std::string id;
    std::string u;
    std::string v;
    Rational conductance;
};

/// Token inside a boundary vertex's rotation list separating the edges that
/// face the next block member (before it) from those facing the previous one.
inline const std::string kSectorMark = "|";

/// A cactus network: a graph drawn in a disc with boundary vertices b1..bn in
/// clockwise order, glued according to `shape`.
///
/// Rotations are clockwise. At an internal vertex the list is cyclic. At a
/// boundary vertex bi it is linear, running from the boundary arc toward
/// b(i+1) round to the arc toward b(i-1).
struct CactusNetwork {
    int n = 0;
    std::vector<std::vector<int>> shape;
    std::vector<std::string> internal_vertices;
    std::vector<Edge> edges;
    std::map<std::string, std::vector<std::string>> rotations;

    static std::string boundary_name(int i) { return "b" + std::to_string(i); }

    /// The shape as a partition; throws InvalidInput if it is not a
    /// noncrossing partition of 1..n.
    [[nodiscard]] NoncrossingPartition partition() const { return {n, shape}; }

    /// Boundary label of a vertex name, or nullopt for internal vertices.
    [[nodiscard]] std::optional<int> boundary_label(const std::string& v) const {
        if (v.size() < 2 || v[0] != 'b') return std::nullopt;
        if (std::find(internal_vertices.begin(), internal_vertices.end(), v) != internal_vertices.end()) return std::nullopt;
        for (std::size_t k = 1; k < v.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(v[k]))) return std::nullopt;
        int i = std::stoi(v.substr(1));
        if (i < 1 || i > n || boundary_name(i) != v) return std::nullopt;
        return i;
    }

    [[nodiscard]] bool has_vertex(const std::string& v) const {
        return boundary_label(v).has_value() ||
               std::find(internal_vertices.begin(), internal_vertices.end(), v) != internal_vertices.end();
    }

    [[nodiscard]] const Edge& edge(const std::string& id) const {
        for (const auto& e : edges)
            if (e.id == id) return e;
        throw InvalidInput("no edge '" + id + "'");
    }

    [[nodiscard]] Rational conductance_product() const {
        Rational p = 1;
        for (const auto& e : edges) p *= e.conductance;
        return p;
    }

    [[nodiscard]] std::vector<std::string> rotation(const std::string& v) const {
        auto it = rotations.find(v);
        return it == rotations.end() ? std::vector<std::string>{} : it->second;
    }
};

/// Combinatorial map of the glued network with the n boundary arcs added as
/// extra edges. Edge k < num_edges is net.edges[k]; edge num_edges + i - 1 is
/// the arc from boundary i to boundary i+1. Dart 2k runs u -> v (arcs: i ->
/// i+1), dart 2k+1 the other way. Rotations are clockwise cyclic lists of the
/// darts leaving each vertex.
struct CactusMap {
    int n = 0;
    int num_edges = 0;
    int num_vertices = 0;
    std::vector<int> tail;
    std::vector<std::vector<int>> rotation;
    std::vector<int> slot;

    static int rev(int d) { return d ^ 1; }
    [[nodiscard]] int edge_of(int d) const { return d / 2; }
    [[nodiscard]] bool is_arc(int d) const { return d / 2 >= num_edges; }
    [[nodiscard]] int head(int d) const { return tail[static_cast<std::size_t>(rev(d))]; }
    [[nodiscard]] int dart_count() const { return static_cast<int>(tail.size()); }

    [[nodiscard]] int next_cw(int d) const {
        const auto& r = rotation[static_cast<std::size_t>(tail[static_cast<std::size_t>(d)])];
        return r[(static_cast<std::size_t>(slot[static_cast<std::size_t>(d)]) + 1) % r.size()];
    }
    [[nodiscard]] int prev_cw(int d) const {
        const auto& r = rotation[static_cast<std::size_t>(tail[static_cast<std::size_t>(d)])];
        return r[(static_cast<std::size_t>(slot[static_cast<std::size_t>(d)]) + r.size() - 1) % r.size()];
    }
    /// Successor along the face to the left of d.
    [[nodiscard]] int face_next(int d) const { return next_cw(rev(d)); }

    /// Arc dart leaving boundary i toward i+1, and the one leaving i toward i-1.
    [[nodiscard]] int arc_out(int i) const { return 2 * (num_edges + i - 1); }
    [[nodiscard]] int arc_in(int i) const { return 2 * (num_edges + (i + n - 2) % n) + 1; }
    /// Boundary label i with arc_out(i) == d, for an arc dart leaving along the circle.
    [[nodiscard]] int arc_label(int d) const { return d / 2 - num_edges + 1; }

    /// Face orbits; each face is listed from its smallest dart.
    [[nodiscard]] std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(tail.size(), false);
        for (int d = 0; d < dart_count(); ++d) {
            if (seen[static_cast<std::size_t>(d)]) continue;
            out.emplace_back();
            for (int x = d; !seen[static_cast<std::size_t>(x)]; x = face_next(x)) {
                seen[static_cast<std::size_t>(x)] = true;
                out.back().push_back(x);
            }
        }
        return out;
    }
};

struct QuotientEdge {
    std::string id;
    int u = 0;
    int v = 0;
    Rational conductance;
    bool loop = false;
};

/// The network with each shape block merged into a single vertex. Vertices
/// 0..blocks-1 are the blocks in shape order, then the internal vertices.
struct QuotientGraph {
    int n = 0;
    NoncrossingPartition shape;
    int boundary_count = 0;
    std::vector<std::string> vertex_names;
    std::vector<QuotientEdge> edges;
    CactusMap map;

    [[nodiscard]] int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    [[nodiscard]] int vertex_of_label(int i) const { return shape.block_of(i); }
    [[nodiscard]] int vertex_index(const std::string& name) const {
        for (std::size_t k = 0; k < vertex_names.size(); ++k)
            if (vertex_names[k] == name) return static_cast<int>(k);
        throw InvalidInput("no vertex '" + name + "'");
    }
};

namespace detail {

// Checks the rotation lists against the edge list and builds the glued map.
// Throws InvalidInput on any structural mismatch.
inline QuotientGraph build_quotient(const CactusNetwork& net) {
    const int n = net.n;
    if (n < 1) throw InvalidInput("n must be positive");
    const NoncrossingPartition shape = net.partition();
    std::set<std::string> ids;
    for (const auto& v : net.internal_vertices) {
        if (!ids.insert(v).second) throw InvalidInput("duplicate internal vertex '" + v + "'");
        if (v == kSectorMark) throw InvalidInput("reserved vertex name '|'");
    }
    for (int i = 1; i <= n; ++i)
        if (ids.count(CactusNetwork::boundary_name(i))) throw InvalidInput("internal vertex named like a boundary vertex");

    QuotientGraph q;
    q.n = n;
    q.shape = shape;
    q.boundary_count = shape.block_count();
    for (const auto& b : shape.blocks()) {
        std::vector<int> labels = b;
        std::string name = "{";
        for (std::size_t k = 0; k < labels.size(); ++k) name += (k ? "," : "") + std::to_string(labels[k]);
        q.vertex_names.push_back(name + "}");
    }
    for (const auto& v : net.internal_vertices) q.vertex_names.push_back(v);
    auto vertex_of = [&](const std::string& name) -> int {
        if (auto i = net.boundary_label(name)) return shape.block_of(*i);
        auto it = std::find(net.internal_vertices.begin(), net.internal_vertices.end(), name);
        if (it == net.internal_vertices.end()) throw InvalidInput("unknown vertex '" + name + "'");
        return q.boundary_count + static_cast<int>(it - net.internal_vertices.begin());
    };

    std::map<std::string, int> edge_index;
    for (const auto& e : net.edges) {
        if (e.id.empty() || e.id == kSectorMark) throw InvalidInput("bad edge id '" + e.id + "'");
        if (!edge_index.emplace(e.id, static_cast<int>(edge_index.size())).second)
            throw InvalidInput("duplicate edge id '" + e.id + "'");
        if (e.u == e.v) throw InvalidInput("edge '" + e.id + "' is a loop");
        int u = vertex_of(e.u);
        int v = vertex_of(e.v);
        q.edges.push_back({e.id, u, v, e.conductance, u == v});
    }

    const int E = static_cast<int>(net.edges.size());
    CactusMap& m = q.map;
    m.n = n;
    m.num_edges = E;
    m.num_vertices = q.vertex_count();
    m.tail.assign(static_cast<std::size_t>(2 * (E + n)), -1);
    m.rotation.assign(static_cast<std::size_t>(m.num_vertices), {});

    for (const auto& [name, list] : net.rotations)
        if (!net.has_vertex(name)) throw InvalidInput("rotation given for unknown vertex '" + name + "'");

    // Dart of edge `id` leaving pre-quotient vertex `name`.
    std::set<int> used;
    auto dart_at = [&](const std::string& name, const std::string& id) {
        auto it = edge_index.find(id);
        if (it == edge_index.end()) throw InvalidInput("rotation at '" + name + "' names unknown edge '" + id + "'");
        const Edge& e = net.edges[static_cast<std::size_t>(it->second)];
        int d;
        if (e.u == name) d = 2 * it->second;
        else if (e.v == name) d = 2 * it->second + 1;
        else throw InvalidInput("edge '" + id + "' listed at '" + name + "' but not incident to it");
        if (!used.insert(d).second) throw InvalidInput("edge '" + id + "' listed twice at '" + name + "'");
        return d;
    };

    for (std::size_t k = 0; k < net.internal_vertices.size(); ++k) {
        const auto& name = net.internal_vertices[k];
        auto& rot = m.rotation[static_cast<std::size_t>(q.boundary_count) + k];
        for (const auto& id : net.rotation(name)) {
            if (id == kSectorMark) throw InvalidInput("sector mark at internal vertex '" + name + "'");
            rot.push_back(dart_at(name, id));
        }
    }

    // Boundary members: split each list into the part before the mark
    // (facing the next member) and the part after it (facing the previous).
    std::vector<std::vector<int>> first(static_cast<std::size_t>(n) + 1), last(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        const auto name = CactusNetwork::boundary_name(i);
        bool marked = false;
        for (const auto& id : net.rotation(name)) {
            if (id == kSectorMark) {
                if (marked) throw InvalidInput("two sector marks at '" + name + "'");
                marked = true;
                continue;
            }
            (marked ? last : first)[static_cast<std::size_t>(i)].push_back(dart_at(name, id));
        }
    }
    for (const auto& b : shape.blocks()) {
        auto& rot = m.rotation[static_cast<std::size_t>(shape.block_of(b.front()))];
        for (std::size_t j = 0; j < b.size(); ++j) {
            const int cur = b[j];
            const int nxt = b[(j + 1) % b.size()];
            rot.push_back(m.arc_out(cur));
            rot.insert(rot.end(), first[static_cast<std::size_t>(cur)].begin(), first[static_cast<std::size_t>(cur)].end());
            rot.insert(rot.end(), last[static_cast<std::size_t>(nxt)].begin(), last[static_cast<std::size_t>(nxt)].end());
            rot.push_back(m.arc_in(nxt));
        }
    }

    if (static_cast<int>(used.size()) != 2 * E) {
        for (int d = 0; d < 2 * E; ++d)
            if (!used.count(d)) {
                const Edge& e = net.edges[static_cast<std::size_t>(d / 2)];
                throw InvalidInput("edge '" + e.id + "' missing from rotation at '" + (d % 2 ? e.v : e.u) + "'");
            }
    }

    m.slot.assign(m.tail.size(), -1);
    for (int v = 0; v < m.num_vertices; ++v) {
        const auto& rot = m.rotation[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < rot.size(); ++k) {
            m.tail[static_cast<std::size_t>(rot[k])] = v;
            m.slot[static_cast<std::size_t>(rot[k])] = static_cast<int>(k);
        }
    }
    return q;
}

// Connected components of the glued graph including boundary arcs.
inline std::vector<int> map_components(const CactusMap& m) {
    std::vector<int> parent(static_cast<std::size_t>(m.num_vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int d = 0; d < m.dart_count(); d += 2) parent[static_cast<std::size_t>(find(m.tail[static_cast<std::size_t>(d)]))] = find(m.head(d));
    std::vector<int> comp(static_cast<std::size_t>(m.num_vertices));
    for (int v = 0; v < m.num_vertices; ++v) comp[static_cast<std::size_t>(v)] = find(v);
    return comp;
}

}  // namespace detail

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    [[nodiscard]] bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
    }
    [[nodiscard]] std::vector<ValidationCheck> failures() const {
        std::vector<ValidationCheck> out;
        for (const auto& c : checks)
            if (!c.passed) out.push_back(c);
        return out;
    }
};

/// Runs every structural check and reports; never throws.
inline ValidationReport validate(const CactusNetwork& net) {
    ValidationReport rep;
    auto add = [&](std::string name, bool ok, std::string why = {}) {
        rep.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(why)});
    };

    bool shape_ok = false;
    try {
        shape_ok = is_noncrossing(net.n, net.shape);
        add("partition", true);
        add("noncrossing", shape_ok, "shape has crossing blocks");
    } catch (const InvalidInput& ex) {
        add("partition", false, ex.what());
        add("noncrossing", false, "skipped: not a partition");
    }

    std::string bad;
    for (const auto& e : net.edges)
        if (e.conductance <= 0) bad += (bad.empty() ? "" : ", ") + e.id;
    add("positive-conductances", bad.empty(), "nonpositive conductance on " + bad);

    if (!shape_ok) {
        add("rotation-system", false, "skipped: invalid shape");
        return rep;
    }
    std::optional<QuotientGraph> q;
    try {
        q = detail::build_quotient(net);
        add("rotation-system", true);
    } catch (const InvalidInput& ex) {
        add("rotation-system", false, ex.what());
        return rep;
    }

    const CactusMap& m = q->map;
    auto comp = detail::map_components(m);
    std::map<int, std::array<int, 3>> vef;
    for (int v = 0; v < m.num_vertices; ++v) vef[comp[static_cast<std::size_t>(v)]][0]++;
    for (int d = 0; d < m.dart_count(); d += 2) vef[comp[static_cast<std::size_t>(m.tail[static_cast<std::size_t>(d)])]][1]++;
    for (const auto& f : m.faces()) vef[comp[static_cast<std::size_t>(m.tail[static_cast<std::size_t>(f.front())])]][2]++;
    std::string genus;
    for (const auto& [c, x] : vef) {
        if (x[1] == 0) continue;  // isolated vertex
        if (x[0] - x[1] + x[2] != 2)
            genus += (genus.empty() ? "" : "; ") + std::string("component of ") + q->vertex_names[static_cast<std::size_t>(c)] +
                     " has V-E+F=" + std::to_string(x[0] - x[1] + x[2]);
    }
    add("planarity", genus.empty(), genus);

    int d = m.arc_out(1);
    bool outer = true;
    for (int i = 1; i <= net.n; ++i, d = m.face_next(d))
        if (d != m.arc_out(i)) outer = false;
    outer = outer && d == m.arc_out(1);
    add("boundary-order", outer, "boundary vertices do not appear in clockwise order on the outer face");
    return rep;
}

/// Throws InvalidInput listing the failed checks.
inline void require_valid(const CactusNetwork& net) {
    auto rep = validate(net);
    if (rep.ok()) return;
    std::string msg = "invalid network:";
    for (const auto& c : rep.failures()) msg += " [" + c.name + ": " + c.detail + "]";
    throw InvalidInput(msg);
}

/// Merges each block of the shape into one vertex. Edges inside a block become
/// loops; they are kept and flagged, and ignored by groves and the Laplacian.
inline QuotientGraph quotient_graph(const CactusNetwork& net) {
    require_valid(net);
    return detail::build_quotient(net);
}

}  // namespace cactus
