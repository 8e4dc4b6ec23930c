#pragma once

// Iterated weakening decomposition: remove a minimum weakening vertex set,
// split the rest into SCCs, and recurse into every nontrivial SCC.

#include "svckit/connectivity.hpp"
#include "svckit/graph.hpp"
#include "svckit/scc.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace svckit {

enum class Selection {
    first_lexicographic,  // remove the first minimum set, record only the count
    all_witnesses_report, // same removal, but keep every minimum set on the node
};

struct DecomposeOptions {
    std::size_t max_depth = 1; // number of tree levels, root included
    Selection selection = Selection::first_lexicographic;
    unsigned threads = 0;
    // Enumerate at a node only if C(n, sigma0 - 1) stays below this.
    std::size_t enumeration_budget = 1'000'000;
};

struct DecompositionNode {
    VertexSet vertices; // original ids, ascending
    std::size_t depth = 0;
    std::size_t sigma0 = 0;
    std::size_t zeta0_underlying = 0;
    std::optional<WeakeningSet> chosen_set;   // original ids; empty for complete leaves
    std::optional<std::size_t> witness_count; // number of minimum weakening vertex sets, when enumerated
    std::vector<WeakeningSet> witnesses;      // all_witnesses_report only
    std::vector<std::size_t> condensation_sizes; // SCC sizes after removing chosen_set, descending
    std::vector<std::string> flags;
    std::vector<DecompositionNode> children; // nontrivial SCCs, largest first

    friend bool operator==(const DecompositionNode &, const DecompositionNode &) = default;
};

namespace detail {

inline std::size_t bounded_binomial(std::size_t n, std::size_t k, std::size_t bound) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t value = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
        if (value > bound) return bound + 1;
    }
    return value;
}

inline WeakeningSet to_original(WeakeningSet w, std::span<const Vertex> new_to_old) {
    for (Vertex &v : w.vertices) v = new_to_old[v];
    return w;
}

inline DecompositionNode decompose_node(const DirectedGraph &g, const std::vector<Vertex> &to_original_id,
                                        std::size_t depth, const DecomposeOptions &opts) {
    const std::size_t n = g.vertex_count();
    DecompositionNode node;
    node.vertices = to_original_id;
    node.depth = depth;
    node.sigma0 = svc(g, {opts.threads});
    node.zeta0_underlying = undirected_vertex_connectivity(underlying(g), {opts.threads});

    if (g.edge_count() == n * (n - 1)) {
        node.flags.push_back("complete");
        return node;
    }

    WeakeningSet chosen;
    if (bounded_binomial(n, node.sigma0 - 1, opts.enumeration_budget) <= opts.enumeration_budget) {
        EnumerationOptions eo;
        eo.allow_large_sigma = true;
        eo.threads = opts.threads;
        if (opts.selection == Selection::first_lexicographic) eo.limit = 1;
        WeakeningEnumeration all = weakening_vertex_sets(g, eo);
        node.witness_count = all.total;
        chosen = all.sets.front();
        if (opts.selection == Selection::all_witnesses_report)
            for (const auto &w : all.sets) node.witnesses.push_back(to_original(w, to_original_id));
    } else {
        node.flags.push_back("enumeration_infeasible");
        chosen.kind = WeakeningKind::vertex;
        chosen.vertices = minimum_weakening_vertex_set(g, node.sigma0);
        chosen.resulting_scc_sizes = scc_sizes(remove_vertices(g, chosen.vertices).graph);
    }

    const VertexRemoval rest = remove_vertices(g, chosen.vertices);
    node.chosen_set = to_original(chosen, to_original_id);
    node.condensation_sizes = chosen.resulting_scc_sizes;

    std::vector<const VertexSet *> nontrivial;
    const SccPartition parts = scc(rest.graph);
    for (const auto &c : parts.components)
        if (c.size() >= 2) nontrivial.push_back(&c);
    if (nontrivial.empty()) return node;
    if (depth + 1 >= opts.max_depth) {
        node.flags.push_back("max_depth_reached");
        return node;
    }
    std::sort(nontrivial.begin(), nontrivial.end(), [](const VertexSet *a, const VertexSet *b) {
        return a->size() != b->size() ? a->size() > b->size() : a->front() < b->front();
    });
    for (const VertexSet *c : nontrivial) {
        const VertexRemoval sub = induced(rest.graph, *c);
        std::vector<Vertex> ids;
        for (Vertex local : sub.new_to_old) ids.push_back(to_original_id[rest.new_to_old[local]]);
        node.children.push_back(decompose_node(sub.graph, ids, depth + 1, opts));
    }
    return node;
}

inline std::vector<const DecompositionNode *> largest_per_level(const DecompositionNode &root) {
    std::vector<const DecompositionNode *> result;
    std::vector<const DecompositionNode *> level{&root};
    while (!level.empty()) {
        const DecompositionNode *best = level.front();
        for (const auto *node : level)
            if (node->vertices.size() > best->vertices.size() ||
                (node->vertices.size() == best->vertices.size() && node->vertices.front() < best->vertices.front()))
                best = node;
        result.push_back(best);
        std::vector<const DecompositionNode *> next;
        for (const auto *node : level)
            for (const auto &child : node->children) next.push_back(&child);
        level = std::move(next);
    }
    return result;
}

} // namespace detail

/// Builds the decomposition tree of a strongly connected g (n >= 2). At each
/// node the lexicographically first minimum weakening vertex set is removed.
/// Recursion stops at max_depth levels and at complete bidirected components.
/// If enumeration at a node would exceed the budget, the node is flagged and
/// the set comes from a flow cut certificate instead.
inline DecompositionNode iterate(const DirectedGraph &g, const DecomposeOptions &opts = {}) {
    detail::require_strongly_connected(g, "iterate");
    if (opts.max_depth < 1) throw InputError("iterate: max_depth must be at least 1");
    std::vector<Vertex> ids(g.vertex_count());
    for (Vertex v = 0; v < ids.size(); ++v) ids[v] = v;
    return detail::decompose_node(g, ids, 0, opts);
}

/// sigma0 of the largest component at each tree level, root first.
inline std::vector<std::size_t> sigma_trace(const DecompositionNode &tree) {
    std::vector<std::size_t> trace;
    for (const auto *node : detail::largest_per_level(tree)) trace.push_back(node->sigma0);
    return trace;
}

/// Vertex connectivity of the underlying graph of the largest component at each level.
inline std::vector<std::size_t> zeta_trace(const DecompositionNode &tree) {
    std::vector<std::size_t> trace;
    for (const auto *node : detail::largest_per_level(tree)) trace.push_back(node->zeta0_underlying);
    return trace;
}

} // namespace svckit
