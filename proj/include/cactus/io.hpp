#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "exterior.hpp"
#include "groves.hpp"
#include "matrix.hpp"
#include "network.hpp"
#include "rational.hpp"

namespace cactus {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational json_rational(const Json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InvalidInput(where + ": expected a rational as \"p/q\" or an integer");
}

}  // namespace detail

/// Reads the JSON network format:
///   {"n": 3, "shape": [[1],[2],[3]], "internal_vertices": ["v"],
///    "edges": [{"id": "a", "ends": ["b1","v"], "conductance": "1"}, ...],
///    "rotations": {"b1": ["a"], "v": ["a","b","c"], ...}}
inline CactusNetwork network_from_json(const Json& j) {
    try {
        CactusNetwork net;
        net.n = j.at("n").get<int>();
        if (net.n < 1) throw InvalidInput("n must be positive");
        if (j.contains("shape")) {
            net.shape = j.at("shape").get<std::vector<std::vector<int>>>();
        } else {
            for (int i = 1; i <= net.n; ++i) net.shape.push_back({i});
        }
        if (j.contains("internal_vertices")) net.internal_vertices = j.at("internal_vertices").get<std::vector<std::string>>();
        const Json edges = j.value("edges", Json::array());
        for (const auto& e : edges) {
            const auto ends = e.at("ends").get<std::vector<std::string>>();
            if (ends.size() != 2) throw InvalidInput("edge needs exactly two ends");
            const auto id = e.at("id").get<std::string>();
            net.edges.push_back({id, ends[0], ends[1], detail::json_rational(e.at("conductance"), "edge '" + id + "'")});
        }
        const Json rotations = j.value("rotations", Json::object());
        for (const auto& [v, list] : rotations.items())
            net.rotations[v] = list.get<std::vector<std::string>>();
        return net;
    } catch (const Json::exception& ex) {
        throw InvalidInput(std::string("malformed network file: ") + ex.what());
    }
}

inline Json network_to_json(const CactusNetwork& net) {
    Json j;
    j["n"] = net.n;
    j["shape"] = net.partition().blocks();
    j["internal_vertices"] = net.internal_vertices;
    Json edges = Json::array();
    for (const auto& e : net.edges)
        edges.push_back({{"id", e.id}, {"ends", {e.u, e.v}}, {"conductance", to_string(e.conductance)}});
    j["edges"] = edges;
    Json rot = Json::object();
    for (int i = 1; i <= net.n; ++i) rot[CactusNetwork::boundary_name(i)] = net.rotation(CactusNetwork::boundary_name(i));
    for (const auto& v : net.internal_vertices) rot[v] = net.rotation(v);
    j["rotations"] = rot;
    return j;
}

inline CactusNetwork parse_network(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& ex) {
        throw InvalidInput(std::string("network file is not valid JSON: ") + ex.what());
    }
    return network_from_json(j);
}

inline CactusNetwork load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_network(ss.str());
}

inline Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("matrix must be a list of rows");
    std::vector<RationalVector> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw InvalidInput("matrix row must be a list");
        rows.emplace_back();
        for (const auto& x : r) rows.back().push_back(detail::json_rational(x, "matrix entry"));
    }
    return RationalMatrix::from_rows(rows);
}

/// {"1,1~,2": "p/q", ...} in lexicographic index order.
inline Json to_json(const ExteriorVector& v) {
    Json j = Json::object();
    for (const auto& [s, q] : v.coords()) j[index_set_name(s)] = to_string(q);
    return j;
}

inline ExteriorVector exterior_from_json(int n, int degree, const Json& j) {
    ExteriorVector v(n, degree);
    for (const auto& [k, q] : j.items()) v.add(parse_index_set(k), detail::json_rational(q, "coordinate " + k));
    return v;
}

/// {"{1,2,3}": "p/q", ...} in canonical partition order; zero values omitted.
inline Json to_json(const GroveMeasurements& lam) {
    Json j = Json::object();
    for (std::size_t k = 0; k < lam.partitions().size(); ++k)
        if (lam.at(k) != 0) j[lam.partitions()[k].key()] = to_string(lam.at(k));
    return j;
}

inline GroveMeasurements measurements_from_json(int n, const Json& j) {
    GroveMeasurements lam(n);
    for (const auto& [k, q] : j.items()) lam[parse_partition(n, k)] = detail::json_rational(q, "value of " + k);
    return lam;
}

}  // namespace cactus
