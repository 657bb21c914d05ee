#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "network.hpp"

namespace cactus {

enum class YDeltaDirection { YToDelta, DeltaToY };

namespace detail {

inline bool id_taken(const CactusNetwork& net, const std::string& id) {
    return std::any_of(net.edges.begin(), net.edges.end(), [&](const Edge& e) { return e.id == id; });
}

inline bool vertex_taken(const CactusNetwork& net, const std::string& v) {
    return net.has_vertex(v) || v == kSectorMark;
}

// Smallest k >= 1 for which every name(k) is unused.
template <class Names, class Taken>
int fresh_suffix(Names&& names, Taken&& taken) {
    for (int k = 1;; ++k) {
        bool ok = true;
        for (const auto& s : names(k)) ok = ok && !taken(s);
        if (ok) return k;
    }
}

// Pre-quotient vertex at the tail of a dart of a real edge.
inline const std::string& dart_vertex(const CactusNetwork& net, int d) {
    const Edge& e = net.edges[static_cast<std::size_t>(d / 2)];
    return d % 2 == 0 ? e.u : e.v;
}

inline std::vector<std::string>::iterator token_at(CactusNetwork& net, const std::string& v, const std::string& id) {
    auto& rot = net.rotations[v];
    auto it = std::find(rot.begin(), rot.end(), id);
    if (it == rot.end()) throw IdentityViolation("edge '" + id + "' missing from rotation at '" + v + "'");
    return it;
}

inline void erase_edge(CactusNetwork& net, const std::string& id) {
    net.edges.erase(std::remove_if(net.edges.begin(), net.edges.end(), [&](const Edge& e) { return e.id == id; }), net.edges.end());
}

inline CactusNetwork y_to_delta(const CactusNetwork& net, const std::string& center) {
    const QuotientGraph q = quotient_graph(net);
    if (net.boundary_label(center) || !net.has_vertex(center))
        throw PreconditionError("Y-Delta site '" + center + "' is not an internal vertex");
    const auto rot = net.rotation(center);
    if (rot.size() != 3) throw PreconditionError("Y-Delta site '" + center + "' does not have degree 3");

    std::vector<Edge> spokes;
    std::vector<std::string> far;
    std::set<int> far_q;
    for (const auto& id : rot) {
        const Edge& e = net.edge(id);
        spokes.push_back(e);
        far.push_back(e.u == center ? e.v : e.u);
        const auto label = net.boundary_label(far.back());
        far_q.insert(label ? q.vertex_of_label(*label) : q.vertex_index(far.back()));
    }
    if (far_q.size() != 3) throw PreconditionError("Y-Delta site '" + center + "' has repeated neighbours");

    const Rational sum = spokes[0].conductance + spokes[1].conductance + spokes[2].conductance;
    auto names = [&](int k) {
        std::vector<std::string> out;
        for (const auto& s : spokes) out.push_back(s.id + ".d" + std::to_string(k));
        return out;
    };
    const int k = fresh_suffix(names, [&](const std::string& s) { return id_taken(net, s); });
    const auto ids = names(k);

    CactusNetwork out = net;
    // Triangle edge t joins the far ends of the two spokes other than t.
    std::vector<Edge> tri;
    for (int t = 0; t < 3; ++t) {
        const int p = (t + 1) % 3, r = (t + 2) % 3;
        tri.push_back({ids[static_cast<std::size_t>(t)], far[static_cast<std::size_t>(p)], far[static_cast<std::size_t>(r)],
                       spokes[static_cast<std::size_t>(p)].conductance * spokes[static_cast<std::size_t>(r)].conductance / sum});
    }
    // At far end w_t the spoke is replaced by [edge to w_{t+1}, edge to w_{t-1}].
    for (int t = 0; t < 3; ++t) {
        const auto to_next = ids[static_cast<std::size_t>((t + 2) % 3)];
        const auto to_prev = ids[static_cast<std::size_t>((t + 1) % 3)];
        auto& list = out.rotations[far[static_cast<std::size_t>(t)]];
        auto it = token_at(out, far[static_cast<std::size_t>(t)], spokes[static_cast<std::size_t>(t)].id);
        *it = to_prev;
        list.insert(it, to_next);
    }
    for (const auto& s : spokes) erase_edge(out, s.id);
    for (const auto& e : tri) out.edges.push_back(e);
    out.internal_vertices.erase(std::find(out.internal_vertices.begin(), out.internal_vertices.end(), center));
    out.rotations.erase(center);
    require_valid(out);
    return out;
}

inline std::vector<std::string> split_site(const std::string& site) {
    std::vector<std::string> out;
    std::stringstream ss(site);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

inline CactusNetwork delta_to_y(const CactusNetwork& net, const std::string& site) {
    const QuotientGraph q = quotient_graph(net);
    const CactusMap& m = q.map;
    auto want = split_site(site);
    std::sort(want.begin(), want.end());
    if (want.size() != 3 || std::adjacent_find(want.begin(), want.end()) != want.end())
        throw PreconditionError("Delta-Y site must name three distinct edges, got '" + site + "'");

    std::vector<int> face;
    for (const auto& f : m.faces()) {
        if (f.size() != 3) continue;
        std::vector<std::string> ids;
        bool arc = false;
        for (int d : f) {
            arc = arc || m.is_arc(d);
            if (!arc) ids.push_back(q.edges[static_cast<std::size_t>(m.edge_of(d))].id);
        }
        if (arc) continue;
        std::sort(ids.begin(), ids.end());
        if (ids == want) {
            face = f;
            break;
        }
    }
    if (face.empty()) throw PreconditionError("edges '" + site + "' do not bound a triangular interior face");
    std::set<int> corners;
    for (int d : face) corners.insert(m.tail[static_cast<std::size_t>(d)]);
    if (corners.size() != 3) throw PreconditionError("triangular face '" + site + "' has a repeated corner");

    // Face darts d0 -> d1 -> d2 run counterclockwise; corner x_k is the tail of d_k.
    std::vector<Edge> sides;
    for (int d : face) sides.push_back(net.edges[static_cast<std::size_t>(d / 2)]);
    Rational pair_sum = 0;
    for (int a = 0; a < 3; ++a) pair_sum += sides[static_cast<std::size_t>(a)].conductance * sides[static_cast<std::size_t>((a + 1) % 3)].conductance;

    auto vnames = [&](int k) { return std::vector<std::string>{"y" + std::to_string(k)}; };
    const int kv = fresh_suffix(vnames, [&](const std::string& s) { return vertex_taken(net, s); });
    const std::string center = "y" + std::to_string(kv);
    // Spoke to corner x_k is opposite side d_{k+1}.
    auto enames = [&](int k) {
        std::vector<std::string> out;
        for (const auto& s : sides) out.push_back(s.id + ".y" + std::to_string(k));
        return out;
    };
    const int ke = fresh_suffix(enames, [&](const std::string& s) { return id_taken(net, s); });
    const auto side_ids = enames(ke);

    CactusNetwork out = net;
    std::vector<Edge> spokes(3);
    for (int k = 0; k < 3; ++k) {
        const int opp = (k + 1) % 3;
        const int d = face[static_cast<std::size_t>(k)];
        spokes[static_cast<std::size_t>(k)] = {side_ids[static_cast<std::size_t>(opp)], center, dart_vertex(net, d),
                                               pair_sum / sides[static_cast<std::size_t>(opp)].conductance};
    }
    // At x_k the darts rev(d_{k-1}) and d_k are consecutive; the spoke takes the first one's place.
    for (int k = 0; k < 3; ++k) {
        const int d = face[static_cast<std::size_t>(k)];
        const int r = CactusMap::rev(face[static_cast<std::size_t>((k + 2) % 3)]);
        auto it = token_at(out, dart_vertex(net, r), net.edges[static_cast<std::size_t>(r / 2)].id);
        *it = spokes[static_cast<std::size_t>(k)].id;
        spokes[static_cast<std::size_t>(k)].v = dart_vertex(net, r);
        auto& list = out.rotations[dart_vertex(net, d)];
        list.erase(token_at(out, dart_vertex(net, d), net.edges[static_cast<std::size_t>(d / 2)].id));
    }
    for (const auto& s : sides) erase_edge(out, s.id);
    for (const auto& s : spokes) out.edges.push_back(s);
    out.internal_vertices.push_back(center);
    std::vector<std::string> crot;
    for (int k = 2; k >= 0; --k) crot.push_back(spokes[static_cast<std::size_t>(k)].id);
    out.rotations[center] = crot;
    require_valid(out);
    return out;
}

}  // namespace detail

/// Y-Delta move. For YToDelta the site is an internal vertex of degree 3; for
/// DeltaToY it is the comma-separated ids of the three edges of a triangular face.
inline CactusNetwork ydelta(const CactusNetwork& net, const std::string& site, YDeltaDirection dir) {
    return dir == YDeltaDirection::YToDelta ? detail::y_to_delta(net, site) : detail::delta_to_y(net, site);
}

/// Every site where a move of the given direction applies.
inline std::vector<std::string> ydelta_sites(const CactusNetwork& net, YDeltaDirection dir) {
    std::vector<std::string> out;
    if (dir == YDeltaDirection::YToDelta) {
        for (const auto& v : net.internal_vertices) {
            try {
                detail::y_to_delta(net, v);
                out.push_back(v);
            } catch (const PreconditionError&) {
            }
        }
        return out;
    }
    const QuotientGraph q = quotient_graph(net);
    for (const auto& f : q.map.faces()) {
        if (f.size() != 3) continue;
        if (std::any_of(f.begin(), f.end(), [&](int d) { return q.map.is_arc(d); })) continue;
        std::string site;
        for (int d : f) site += (site.empty() ? "" : ",") + q.edges[static_cast<std::size_t>(d / 2)].id;
        try {
            detail::delta_to_y(net, site);
            out.push_back(site);
        } catch (const PreconditionError&) {
        }
    }
    return out;
}

/// Dual cactus network, relabelled so that the dual boundary vertex sitting
/// on the arc from i to i+1 is called i. Edge e becomes "e*" with conductance
/// 1/c(e); interior faces become internal vertices f1, f2, ...
inline CactusNetwork dual(const CactusNetwork& net) {
    const QuotientGraph q = quotient_graph(net);
    const CactusMap& m = q.map;
    const int n = net.n;
    {
        auto comp = detail::map_components(m);
        for (int v = 0; v < m.num_vertices; ++v)
            if (comp[static_cast<std::size_t>(v)] != comp[0])
                throw PreconditionError("vertex '" + q.vertex_names[static_cast<std::size_t>(v)] + "' is cut off from the boundary; dual undefined");
    }

    CactusNetwork out;
    out.n = n;
    std::vector<std::string> owner(static_cast<std::size_t>(m.dart_count()));
    int interior = 0;
    for (const auto& f : m.faces()) {
        if (std::any_of(f.begin(), f.end(), [&](int d) { return m.is_arc(d) && d % 2 == 0; })) {
            if (!std::all_of(f.begin(), f.end(), [&](int d) { return m.is_arc(d) && d % 2 == 0; }))
                throw IdentityViolation("outer face touches an interior edge");
            continue;
        }
        std::vector<int> cw(f.rbegin(), f.rend());
        std::vector<int> arcs;
        for (int d : cw)
            if (m.is_arc(d)) arcs.push_back(m.arc_label(CactusMap::rev(d)));
        if (arcs.empty()) {
            const std::string name = "f" + std::to_string(++interior);
            out.internal_vertices.push_back(name);
            auto& rot = out.rotations[name];
            for (int d : cw) {
                owner[static_cast<std::size_t>(d)] = name;
                rot.push_back(net.edges[static_cast<std::size_t>(d / 2)].id + "*");
            }
            continue;
        }
        std::sort(arcs.begin(), arcs.end());
        out.shape.push_back(arcs);
        // Darts clockwise after the arc of label i (up to the next arc) belong to i.
        auto start = std::find_if(cw.begin(), cw.end(), [&](int d) { return m.is_arc(d); });
        std::rotate(cw.begin(), start, cw.end());
        std::string cur;
        for (int d : cw) {
            if (m.is_arc(d)) {
                cur = CactusNetwork::boundary_name(m.arc_label(CactusMap::rev(d)));
                out.rotations[cur];
                continue;
            }
            owner[static_cast<std::size_t>(d)] = cur;
            out.rotations[cur].push_back(net.edges[static_cast<std::size_t>(d / 2)].id + "*");
        }
    }
    std::sort(out.shape.begin(), out.shape.end());
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const auto& u = owner[2 * e];
        const auto& v = owner[2 * e + 1];
        if (u == v) throw PreconditionError("edge '" + net.edges[e].id + "' has the same face on both sides; its dual would be a loop");
        out.edges.push_back({net.edges[e].id + "*", u, v, 1 / net.edges[e].conductance});
    }
    for (auto it = out.rotations.begin(); it != out.rotations.end();)
        it = it->second.empty() ? out.rotations.erase(it) : std::next(it);
    auto rep = validate(out);
    if (!rep.ok()) {
        std::string msg = "dual network failed validation:";
        for (const auto& c : rep.failures()) msg += " [" + c.name + ": " + c.detail + "]";
        throw IdentityViolation(msg);
    }
    return out;
}

}  // namespace cactus
