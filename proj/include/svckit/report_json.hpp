#pragma once

// Canonical JSON for connectivity reports and decomposition trees.
// Keys come out sorted (nlohmann::json objects are ordered maps) and arrays
// follow the deterministic orders of the producing modules, so equal inputs
// serialise to identical bytes.

#include "svckit/connectivity.hpp"
#include "svckit/decompose.hpp"
#include "svckit/graph.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <string>

namespace svckit {

using Json = nlohmann::json;

inline constexpr const char *kReportSchema = "svckit-report/1";

inline std::string canonical(const Json &j) { return j.dump(2) + '\n'; }

inline Json to_json(const GraphStats &s) {
    return Json{{"n", s.n},
                {"m", s.m},
                {"min_degree", s.min_degree},
                {"max_degree", s.max_degree},
                {"min_in", s.min_in},
                {"max_in", s.max_in},
                {"min_out", s.min_out},
                {"max_out", s.max_out},
                {"diameter", s.diameter ? Json(*s.diameter) : Json(nullptr)}};
}

/// `g` supplies labels; pass nullptr to omit them.
inline Json to_json(const WeakeningSet &w, const DirectedGraph *g = nullptr) {
    Json j;
    const bool labelled = g && g->has_labels();
    if (w.kind == WeakeningKind::vertex) {
        j["kind"] = "vertex";
        j["members"] = w.vertices;
        if (labelled) {
            Json labels = Json::array();
            for (Vertex v : w.vertices) labels.push_back(g->label(v));
            j["labels"] = labels;
        }
    } else {
        j["kind"] = "edge";
        Json members = Json::array(), labels = Json::array();
        for (const Edge &e : w.edges) {
            members.push_back({e.from, e.to});
            if (labelled) labels.push_back({g->label(e.from), g->label(e.to)});
        }
        j["members"] = members;
        if (labelled) j["labels"] = labels;
    }
    j["resulting_scc_sizes"] = w.resulting_scc_sizes;
    return j;
}

inline WeakeningSet weakening_set_from_json(const Json &j) {
    WeakeningSet w;
    if (j.at("kind") == "vertex") {
        w.kind = WeakeningKind::vertex;
        w.vertices = j.at("members").get<VertexSet>();
    } else {
        w.kind = WeakeningKind::edge;
        for (const auto &pair : j.at("members")) w.edges.push_back({pair.at(0), pair.at(1)});
    }
    w.resulting_scc_sizes = j.at("resulting_scc_sizes").get<std::vector<std::size_t>>();
    return w;
}

namespace detail {

inline Json report_body(const ConnectivityReport &r, const DirectedGraph &g) {
    Json j;
    j["n"] = r.stats.n;
    j["m"] = r.stats.m;
    j["stats"] = to_json(r.stats);
    j["sigma0"] = r.sigma0;
    j["sigma1"] = r.sigma1;
    j["zeta0_underlying"] = r.zeta0_underlying;
    j["zeta1_underlying"] = r.zeta1_underlying;
    if (r.vertex_witnesses || r.edge_witnesses)
        j["witness_counts"] = {r.vertex_witnesses ? Json(r.vertex_witnesses->total) : Json(nullptr),
                               r.edge_witnesses ? Json(r.edge_witnesses->total) : Json(nullptr)};
    else
        j["witness_counts"] = nullptr;
    Json vw = Json::array(), ew = Json::array();
    if (r.vertex_witnesses)
        for (const auto &w : r.vertex_witnesses->sets) vw.push_back(to_json(w, &g));
    if (r.edge_witnesses)
        for (const auto &w : r.edge_witnesses->sets) ew.push_back(to_json(w, &g));
    j["vertex_witnesses"] = vw;
    j["edge_witnesses"] = ew;
    j["flags"] = r.flags;
    Json components = Json::array();
    for (const auto &c : r.components) components.push_back({{"vertices", c.vertices}, {"report", report_body(c.report, g)}});
    j["components"] = components;
    return j;
}

inline Json node_to_json(const DecompositionNode &node, const DirectedGraph &g) {
    Json j;
    j["depth"] = node.depth;
    j["vertices"] = node.vertices;
    j["size"] = node.vertices.size();
    j["sigma0"] = node.sigma0;
    j["zeta0_underlying"] = node.zeta0_underlying;
    j["chosen_set"] = node.chosen_set ? to_json(*node.chosen_set, &g) : Json(nullptr);
    j["witness_count"] = node.witness_count ? Json(*node.witness_count) : Json(nullptr);
    Json witnesses = Json::array();
    for (const auto &w : node.witnesses) witnesses.push_back(to_json(w, &g));
    j["witnesses"] = witnesses;
    j["condensation_sizes"] = node.condensation_sizes;
    j["flags"] = node.flags;
    Json children = Json::array();
    for (const auto &child : node.children) children.push_back(node_to_json(child, g));
    j["children"] = children;
    return j;
}

} // namespace detail

/// `g` is the graph the report describes (used for labels).
inline Json to_json(const ConnectivityReport &r, const DirectedGraph &g) {
    Json j = detail::report_body(r, g);
    j["schema"] = kReportSchema;
    j["kind"] = "connectivity";
    return j;
}

inline Json to_json(const DecompositionNode &tree, const DirectedGraph &g) {
    return Json{{"schema", kReportSchema},
                {"kind", "decomposition"},
                {"sigma_trace", sigma_trace(tree)},
                {"zeta_trace", zeta_trace(tree)},
                {"root", detail::node_to_json(tree, g)}};
}

inline DecompositionNode node_from_json(const Json &j) {
    DecompositionNode node;
    node.depth = j.at("depth");
    node.vertices = j.at("vertices").get<VertexSet>();
    node.sigma0 = j.at("sigma0");
    node.zeta0_underlying = j.at("zeta0_underlying");
    if (!j.at("chosen_set").is_null()) node.chosen_set = weakening_set_from_json(j.at("chosen_set"));
    if (!j.at("witness_count").is_null()) node.witness_count = j.at("witness_count").get<std::size_t>();
    for (const auto &w : j.at("witnesses")) node.witnesses.push_back(weakening_set_from_json(w));
    node.condensation_sizes = j.at("condensation_sizes").get<std::vector<std::size_t>>();
    node.flags = j.at("flags").get<std::vector<std::string>>();
    for (const auto &child : j.at("children")) node.children.push_back(node_from_json(child));
    return node;
}

/// Inverse of to_json(DecompositionNode, ...) up to labels.
inline DecompositionNode tree_from_json(const Json &j) { return node_from_json(j.at("root")); }

inline void write_json(const Json &j, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << canonical(j);
    if (!out) throw InputError("write failed for " + path.string());
}

inline void write_report(const ConnectivityReport &r, const DirectedGraph &g, const std::filesystem::path &path) {
    write_json(to_json(r, g), path);
}

inline void write_report(const DecompositionNode &tree, const DirectedGraph &g, const std::filesystem::path &path) {
    write_json(to_json(tree, g), path);
}

} // namespace svckit
