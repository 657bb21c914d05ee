#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cactus.hpp"

namespace cactus::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kPrecondition = 2, kIdentity = 3 };

namespace detail {

inline void emit(std::ostream& out, const Json& doc, bool compact) {
    out << (compact ? doc.dump() : doc.dump(2)) << '\n';
}

inline void write_network(const CactusNetwork& net, const std::string& path, std::ostream& out, bool compact) {
    const Json doc = network_to_json(net);
    if (path.empty()) {
        emit(out, doc, compact);
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write '" + path + "'");
    emit(f, doc, compact);
}

inline CactusNetwork load_valid(const std::string& path) {
    CactusNetwork net = load_network(path);
    require_valid(net);
    return net;
}

inline ExteriorVector image_of(const CactusNetwork& net) { return lam_map(lambda_vector(net)); }

inline bool trivial_shape(const CactusNetwork& net) { return static_cast<int>(net.shape.size()) == net.n; }

}  // namespace detail

/// Parses argv, runs one subcommand and prints its document. Returns the exit
/// code: 0 ok, 1 invalid input, 2 precondition violated, 3 identity violated.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact electrical invariants of cactus networks"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "pretty";
    app.add_option("--output", format, "Output layout")->check(CLI::IsMember({"pretty", "compact"}));

    std::string file, other, from, chart, site, direction, out_path;
    bool check_isotropy = false;
    int kernel_n = 0;

    auto with_file = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Network file")->required();
        return sub;
    };

    auto* validate_cmd = with_file("validate", "Structural checks; exit 0 iff valid");
    auto* lambda_cmd = with_file("lambda", "Grove measurements");
    auto* response_cmd = with_file("response", "Response matrix of the glued network");
    auto* resistance_cmd = with_file("resistance", "Effective resistances between boundary labels");
    auto* lstar_cmd = with_file("lstar", "Dual response matrix from the resistances");
    auto* plucker_cmd = with_file("plucker", "Pluecker coordinates of the image point");
    plucker_cmd->add_flag("--check-isotropy", check_isotropy, "Also test the contraction");
    auto* isotropy_cmd = with_file("isotropy", "Whether the image point is isotropic");
    auto* tnn_cmd = with_file("tnn", "Whether the image point is totally nonnegative");
    auto* chart_cmd = with_file("chart", "Chart representative built from a matrix");
    chart_cmd->add_option("--from", from)->required()->check(CLI::IsMember({"response", "resistance"}));
    auto* extract_cmd = with_file("extract", "Symmetric matrix read back from the image point");
    extract_cmd->add_option("--chart", chart)->required()->check(CLI::IsMember({"not-shorted", "connected"}));
    auto* ydelta_cmd = with_file("ydelta", "Apply one Y-Delta move");
    ydelta_cmd->add_option("--site", site, "Center vertex, or three comma separated triangle edges")->required();
    ydelta_cmd->add_option("--direction", direction)->required()->check(CLI::IsMember({"ytod", "dtoy"}));
    ydelta_cmd->add_option("-o,--out", out_path, "Write the network here instead of stdout");
    auto* dual_cmd = with_file("dual", "Dual network");
    dual_cmd->add_option("-o,--out", out_path, "Write the network here instead of stdout");
    auto* medial_cmd = with_file("medial", "Medial pairing of the 2n boundary points");
    auto* minimal_cmd = with_file("minimal", "Whether the medial graph is minimal");
    auto* equiv_cmd = with_file("equiv", "Whether two networks are electrically equivalent");
    equiv_cmd->add_option("other", other, "Second network file")->required();
    auto* kernel_cmd = app.add_subcommand("kernel-dim", "Dimension of the kernel of the contraction");
    kernel_cmd->add_option("--n", kernel_n)->required()->check(CLI::Range(2, kKappaKernelMaxN));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }
    const bool compact = format == "compact";

    try {
        Json doc;
        int code = kOk;
        if (validate_cmd->parsed()) {
            const auto rep = validate(load_network(file));
            doc["valid"] = rep.ok();
            Json checks = Json::array();
            for (const auto& c : rep.checks) {
                Json row = {{"name", c.name}, {"passed", c.passed}};
                if (!c.passed) row["detail"] = c.detail;
                checks.push_back(row);
            }
            doc["checks"] = checks;
            code = rep.ok() ? kOk : kInvalidInput;
        } else if (lambda_cmd->parsed()) {
            doc["lambda"] = to_json(lambda_vector(detail::load_valid(file)));
        } else if (response_cmd->parsed()) {
            const auto q = quotient_graph(detail::load_valid(file));
            Json blocks = Json::array();
            for (int b = 0; b < q.boundary_count; ++b) blocks.push_back(q.vertex_names[static_cast<std::size_t>(b)]);
            doc["vertices"] = blocks;
            doc["response"] = to_json(response_matrix(q));
        } else if (resistance_cmd->parsed()) {
            doc["resistance"] = to_json(resistance_matrix(detail::load_valid(file)));
        } else if (lstar_cmd->parsed()) {
            doc["lstar"] = to_json(lstar_from_resistance(resistance_matrix(detail::load_valid(file))));
        } else if (plucker_cmd->parsed()) {
            const auto net = detail::load_valid(file);
            const auto p = detail::image_of(net);
            doc["plucker"] = to_json(p);
            if (check_isotropy) {
                const bool zero = kappa(omega(net.n), p).is_zero();
                doc["isotropic"] = zero;
                if (!zero) code = kIdentity;
            }
        } else if (isotropy_cmd->parsed()) {
            const auto net = detail::load_valid(file);
            const bool zero = kappa(omega(net.n), detail::image_of(net)).is_zero();
            doc["isotropic"] = zero;
            if (!zero) code = kIdentity;
        } else if (tnn_cmd->parsed()) {
            const bool tnn = is_totally_nonnegative(detail::image_of(detail::load_valid(file)));
            doc["totally_nonnegative"] = tnn;
            if (!tnn) code = kIdentity;
        } else if (chart_cmd->parsed()) {
            const auto net = detail::load_valid(file);
            if (from == "response") {
                if (!detail::trivial_shape(net))
                    throw PreconditionError("the response chart needs a network with no glued boundary vertices");
                doc["chart"] = "not-shorted";
                doc["representative"] = to_json(chart_from_response(response_matrix(net)));
            } else {
                doc["chart"] = "connected";
                doc["representative"] = to_json(chart_from_lstar(lstar_from_resistance(resistance_matrix(net))));
            }
        } else if (extract_cmd->parsed()) {
            const auto p = detail::image_of(detail::load_valid(file));
            const auto rep = representative_from_plucker(p);
            doc["chart"] = chart;
            doc["matrix"] = to_json(extract_symmetric(rep, chart == "not-shorted" ? Chart::NotShorted : Chart::Connected));
        } else if (ydelta_cmd->parsed()) {
            const auto dir = direction == "ytod" ? YDeltaDirection::YToDelta : YDeltaDirection::DeltaToY;
            detail::write_network(ydelta(detail::load_valid(file), site, dir), out_path, out, compact);
            return kOk;
        } else if (dual_cmd->parsed()) {
            detail::write_network(dual(detail::load_valid(file)), out_path, out, compact);
            return kOk;
        } else if (medial_cmd->parsed()) {
            Json pairs = Json::array();
            const auto pairing = medial_pairing(detail::load_valid(file));
            for (const auto& [a, b] : pairing.pairs()) pairs.push_back({a, b});
            doc["pairing"] = pairs;
        } else if (minimal_cmd->parsed()) {
            doc["minimal"] = is_minimal(detail::load_valid(file));
        } else if (equiv_cmd->parsed()) {
            const auto eq = electrically_equivalent(detail::load_valid(file), detail::load_valid(other));
            doc["equivalent"] = eq.equivalent;
            doc["factor"] = eq.equivalent ? Json(to_string(eq.factor)) : Json(nullptr);
        } else if (kernel_cmd->parsed()) {
            doc["n"] = kernel_n;
            doc["kernel_dimension"] = kernel_dimension_of_kappa(kernel_n);
        }
        detail::emit(out, doc, compact);
        return code;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kPrecondition;
    } catch (const IdentityViolation& e) {
        err << "identity violated: " << e.what() << '\n';
        return kIdentity;
    }
}

}  // namespace cactus::cli
