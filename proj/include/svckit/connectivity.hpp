#pragma once

// Strong vertex / edge connectivity of digraphs and the minimum weakening
// sets that realise them.
//
// A vertex set U is weakening when g - U is not strongly connected or has a
// single vertex; an edge set D is weakening when g - D is not strongly
// connected. sigma0 / sigma1 are the minimum sizes of such sets.

#include "svckit/dominators.hpp"
#include "svckit/flow.hpp"
#include "svckit/graph.hpp"
#include "svckit/parallel.hpp"
#include "svckit/scc.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace svckit {

struct ComputeOptions {
    unsigned threads = 0; // 0: all hardware threads
};

struct EnumerationOptions {
    std::optional<std::size_t> limit;
    // Enumeration cost grows like n^(sigma-1) graph scans; sigma >= 3 must be requested.
    bool allow_large_sigma = false;
    unsigned threads = 0;
};

enum class WeakeningKind { vertex, edge };

struct WeakeningSet {
    WeakeningKind kind = WeakeningKind::vertex;
    VertexSet vertices; // used when kind == vertex, ascending
    EdgeSet edges;      // used when kind == edge, ascending
    std::vector<std::size_t> resulting_scc_sizes; // descending

    std::size_t size() const noexcept { return kind == WeakeningKind::vertex ? vertices.size() : edges.size(); }

    friend bool operator==(const WeakeningSet &, const WeakeningSet &) = default;
};

struct WeakeningEnumeration {
    std::size_t sigma = 0;
    std::vector<WeakeningSet> sets; // lexicographic by member list
    std::size_t total = 0;          // number of minimum weakening sets, before truncation
    bool capped = false;            // sets was truncated to the limit
};

namespace detail {

inline void require_strongly_connected(const DirectedGraph &g, const char *what) {
    if (g.vertex_count() < 2)
        throw PreconditionError(std::string(what) + ": graph needs at least 2 vertices");
    if (!is_strongly_connected(g))
        throw PreconditionError(std::string(what) + ": graph is not strongly connected");
}

// min(out-degree, in-degree) over all vertices, ignoring vertices adjacent to
// everything in that direction. Removing the out- (or in-) neighbourhood of
// such a vertex leaves it unable to reach (be reached by) the rest.
inline std::size_t vertex_degree_bound(const DirectedGraph &g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = n - 1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.out_degree(v) < n - 1) best = std::min(best, g.out_degree(v));
        if (g.in_degree(v) < n - 1) best = std::min(best, g.in_degree(v));
    }
    return best;
}

inline std::size_t edge_degree_bound(const DirectedGraph &g) {
    std::size_t best = g.edge_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::min({best, g.out_degree(v), g.in_degree(v)});
    return best;
}

// All r-subsets of [0, n) in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        std::size_t i = r;
        while (i > 0 && c[i - 1] == n - r + i - 1) --i;
        if (i == 0) return out;
        ++c[i - 1];
        for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
    }
}

// Edges of a BFS out-tree and a BFS in-tree rooted at vertex 0, as indices
// into g.edges(). Any weakening edge set must hit one of them.
inline std::vector<bool> tree_edge_mask(const DirectedGraph &g) {
    std::vector<bool> mask(g.edge_count(), false);
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<Vertex> queue{0};
        seen[0] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (Vertex w : pass == 0 ? g.out(v) : g.in(v)) {
                if (seen[w]) continue;
                seen[w] = true;
                queue.push_back(w);
                mask[*(pass == 0 ? g.edge_index(v, w) : g.edge_index(w, v))] = true;
            }
        }
    }
    return mask;
}

inline WeakeningEnumeration finish_enumeration(std::set<std::vector<Vertex>> vsets, std::set<EdgeSet> esets,
                                               WeakeningKind kind, std::size_t sigma, const DirectedGraph &g,
                                               const EnumerationOptions &opts) {
    WeakeningEnumeration result;
    result.sigma = sigma;
    result.total = kind == WeakeningKind::vertex ? vsets.size() : esets.size();
    const std::size_t keep = std::min(result.total, opts.limit.value_or(result.total));
    result.capped = keep < result.total;

    std::vector<WeakeningSet> sets(keep);
    if (kind == WeakeningKind::vertex) {
        auto it = vsets.begin();
        for (std::size_t i = 0; i < keep; ++i, ++it) sets[i].vertices = *it;
    } else {
        auto it = esets.begin();
        for (std::size_t i = 0; i < keep; ++i, ++it) sets[i].edges = *it;
    }
    parallel_for(keep, opts.threads, [&](std::size_t i) {
        WeakeningSet &w = sets[i];
        w.kind = kind;
        w.resulting_scc_sizes = kind == WeakeningKind::vertex ? scc_sizes(remove_vertices(g, w.vertices).graph)
                                                              : scc_sizes(remove_edges(g, w.edges));
    });
    result.sets = std::move(sets);
    return result;
}

inline void check_enumeration_size(std::size_t sigma, const EnumerationOptions &opts, const char *what) {
    if (sigma >= 3 && !opts.allow_large_sigma)
        throw PreconditionError(std::string(what) + ": sigma = " + std::to_string(sigma) +
                                " >= 3, enumeration must be explicitly allowed");
}

} // namespace detail

/// min(MF(u,v), MF(v,u)) over internally disjoint paths; a direction with a
/// direct edge contributes n-1. Equals the fewest other vertices whose removal
/// puts u and v in different components, or n-1 when no such set exists.
inline std::size_t local_sigma(const DirectedGraph &g, Vertex u, Vertex v) {
    detail::check_pair(g, u, v, "local_sigma");
    detail::require_strongly_connected(g, "local_sigma");
    const std::size_t n = g.vertex_count();
    std::size_t best = n - 1;
    if (!g.has_edge(u, v)) best = std::min(best, vertex_max_flow(g, u, v).value);
    if (!g.has_edge(v, u)) best = std::min(best, vertex_max_flow(g, v, u).value);
    return best;
}

/// Strong vertex connectivity sigma0.
///
/// Any minimum weakening set S misses at least one of any sigma0 + 1 vertices,
/// and a vertex x outside S is separated by S from some vertex in one
/// direction. So it suffices to run flows from and to pivots 0, 1, ..., k,
/// where k is the running best; every flow is capped at the running best.
inline std::size_t svc(const DirectedGraph &g, const ComputeOptions &opts = {}) {
    detail::require_strongly_connected(g, "svc");
    const std::size_t n = g.vertex_count();
    std::atomic<std::size_t> best{detail::vertex_degree_bound(g)};

    for (Vertex pivot = 0; pivot < n && pivot <= best.load(); ++pivot) {
        parallel_for(2 * static_cast<std::size_t>(n), opts.threads, [&](std::size_t task) {
            const auto other = static_cast<Vertex>(task / 2);
            if (other == pivot) return;
            const Vertex s = task % 2 == 0 ? pivot : other;
            const Vertex t = task % 2 == 0 ? other : pivot;
            if (g.has_edge(s, t)) return;
            const std::size_t cap = best.load(std::memory_order_relaxed);
            const FlowAnswer f = vertex_max_flow(g, s, t, cap);
            if (!f.saturated) atomic_min(best, f.value);
        });
    }
    return best.load();
}

/// Strong edge connectivity sigma1. A minimum weakening edge set leaves some
/// vertex unreachable from (or unable to reach) any fixed pivot, so flows
/// between vertex 0 and every other vertex in both directions suffice.
inline std::size_t sec(const DirectedGraph &g, const ComputeOptions &opts = {}) {
    detail::require_strongly_connected(g, "sec");
    const std::size_t n = g.vertex_count();
    std::atomic<std::size_t> best{detail::edge_degree_bound(g)};
    const Vertex pivot = 0;
    parallel_for(2 * static_cast<std::size_t>(n), opts.threads, [&](std::size_t task) {
        const auto other = static_cast<Vertex>(task / 2);
        if (other == pivot) return;
        const Vertex s = task % 2 == 0 ? pivot : other;
        const Vertex t = task % 2 == 0 ? other : pivot;
        const FlowAnswer f = edge_max_flow(g, s, t, best.load(std::memory_order_relaxed));
        if (!f.saturated) atomic_min(best, f.value);
    });
    return best.load();
}

/// One minimum weakening vertex set taken from a flow cut certificate:
/// the cut of the first ordered pair (pivot order, as in svc) whose flow
/// equals sigma0, or the lexicographically first (n-1)-set when sigma0 = n-1.
/// Deterministic; sequential.
inline VertexSet minimum_weakening_vertex_set(const DirectedGraph &g, std::size_t sigma0) {
    detail::require_strongly_connected(g, "minimum_weakening_vertex_set");
    const std::size_t n = g.vertex_count();
    if (sigma0 < n - 1) {
        for (Vertex pivot = 0; pivot < n; ++pivot)
            for (Vertex other = 0; other < n; ++other) {
                if (other == pivot) continue;
                for (const auto &[s, t] : {std::pair{pivot, other}, std::pair{other, pivot}}) {
                    if (g.has_edge(s, t)) continue;
                    const FlowAnswer f = vertex_max_flow(g, s, t, sigma0 + 1);
                    if (!f.saturated && f.value == sigma0) return f.vertex_cut;
                }
            }
        throw PreconditionError("minimum_weakening_vertex_set: no cut of size " + std::to_string(sigma0));
    }
    VertexSet all_but_last;
    for (Vertex v = 0; v + 1 < n; ++v) all_but_last.push_back(v);
    return all_but_last;
}

/// Every vertex set of size sigma0 that weakens g.
///
/// A set W of size sigma0 is weakening iff, for any (sigma0-1)-subset S of
/// W, the remaining member is a strong articulation point of the (still
/// strongly connected) graph g - S. Runs one linear-ish dominator pass per
/// (sigma0-1)-subset.
inline WeakeningEnumeration weakening_vertex_sets(const DirectedGraph &g, const EnumerationOptions &opts = {}) {
    const std::size_t sigma = svc(g, {opts.threads});
    detail::check_enumeration_size(sigma, opts, "weakening_vertex_sets");
    const std::size_t n = g.vertex_count();

    const auto prefixes = detail::combinations(n, sigma - 1);
    std::vector<std::vector<VertexSet>> found(prefixes.size());
    parallel_for(prefixes.size(), opts.threads, [&](std::size_t i) {
        VertexSet prefix(prefixes[i].begin(), prefixes[i].end());
        const VertexRemoval rest = remove_vertices(g, prefix);
        VertexSet last;
        if (rest.graph.vertex_count() == 2)
            last = {0, 1};
        else
            last = detail::strong_articulation_points(rest.graph);
        for (Vertex x : last) {
            VertexSet w = prefix;
            w.push_back(rest.new_to_old[x]);
            std::sort(w.begin(), w.end());
            found[i].push_back(std::move(w));
        }
    });

    std::set<VertexSet> unique;
    for (auto &bucket : found)
        for (auto &w : bucket) unique.insert(std::move(w));
    return detail::finish_enumeration(std::move(unique), {}, WeakeningKind::vertex, sigma, g, opts);
}

/// Every edge set of size sigma1 that weakens g. Same scheme as the vertex
/// case using strong bridges; the (sigma1-1)-subsets are restricted to those
/// meeting a BFS in/out tree, since a weakening set must cut one of them.
inline WeakeningEnumeration weakening_edge_sets(const DirectedGraph &g, const EnumerationOptions &opts = {}) {
    const std::size_t sigma = sec(g, {opts.threads});
    detail::check_enumeration_size(sigma, opts, "weakening_edge_sets");
    const auto edges = g.edges();

    std::vector<std::vector<std::size_t>> prefixes;
    if (sigma == 1) {
        prefixes.emplace_back();
    } else {
        const auto tree = detail::tree_edge_mask(g);
        for (auto &c : detail::combinations(g.edge_count(), sigma - 1))
            if (std::any_of(c.begin(), c.end(), [&](std::size_t i) { return tree[i]; }))
                prefixes.push_back(std::move(c));
    }

    std::vector<std::vector<EdgeSet>> found(prefixes.size());
    parallel_for(prefixes.size(), opts.threads, [&](std::size_t i) {
        EdgeSet prefix;
        for (std::size_t idx : prefixes[i]) prefix.push_back(edges[idx]);
        for (const Edge &b : detail::strong_bridges(remove_edges(g, prefix))) {
            EdgeSet w = prefix;
            w.push_back(b);
            std::sort(w.begin(), w.end());
            found[i].push_back(std::move(w));
        }
    });

    std::set<EdgeSet> unique;
    for (auto &bucket : found)
        for (auto &w : bucket) unique.insert(std::move(w));
    return detail::finish_enumeration({}, std::move(unique), WeakeningKind::edge, sigma, g, opts);
}

inline bool is_connected(const UndirectedGraph &d) {
    const std::size_t n = d.vertex_count();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (Vertex w : d.neighbors(queue[head]))
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    return queue.size() == n;
}

/// Classical vertex connectivity (n-1 for complete graphs), computed as
/// svc(doubled(d)). Disconnected input gives 0.
inline std::size_t undirected_vertex_connectivity(const UndirectedGraph &d, const ComputeOptions &opts = {}) {
    if (d.vertex_count() < 2) throw PreconditionError("undirected_vertex_connectivity: needs at least 2 vertices");
    if (!is_connected(d)) return 0;
    return svc(doubled(d), opts);
}

/// Classical edge connectivity, computed as sec(doubled(d)). Disconnected input gives 0.
inline std::size_t undirected_edge_connectivity(const UndirectedGraph &d, const ComputeOptions &opts = {}) {
    if (d.vertex_count() < 2) throw PreconditionError("undirected_edge_connectivity: needs at least 2 vertices");
    if (!is_connected(d)) return 0;
    return sec(doubled(d), opts);
}

// ---------------------------------------------------------------------------
// Aggregate report

struct ComponentReport;

struct ConnectivityReport {
    GraphStats stats;
    std::size_t sigma0 = 0;
    std::size_t sigma1 = 0;
    std::size_t zeta0_underlying = 0;
    std::size_t zeta1_underlying = 0;
    // Present only when the corresponding enumeration ran.
    std::optional<WeakeningEnumeration> vertex_witnesses;
    std::optional<WeakeningEnumeration> edge_witnesses;
    std::vector<std::string> flags;
    // Graphs that are not strongly connected: one report per nontrivial SCC.
    std::vector<ComponentReport> components;

    bool has_flag(std::string_view f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
};

struct ComponentReport {
    VertexSet vertices; // ids in the parent graph
    ConnectivityReport report;
};

struct ReportOptions {
    bool enumerate = false;
    EnumerationOptions enumeration;
    unsigned threads = 0;
};

namespace detail {

inline void remap(WeakeningEnumeration &e, std::span<const Vertex> new_to_old) {
    for (auto &w : e.sets) {
        for (auto &v : w.vertices) v = new_to_old[v];
        for (auto &edge : w.edges) edge = {new_to_old[edge.from], new_to_old[edge.to]};
    }
}

inline void remap(ConnectivityReport &r, std::span<const Vertex> new_to_old) {
    if (r.vertex_witnesses) remap(*r.vertex_witnesses, new_to_old);
    if (r.edge_witnesses) remap(*r.edge_witnesses, new_to_old);
}

} // namespace detail

/// Collects every connectivity figure for g. Never throws on degenerate
/// graphs: they produce a flagged report instead. For graphs that are not
/// strongly connected sigma0 = sigma1 = 0 and each nontrivial SCC gets its
/// own sub-report with witnesses in g's ids.
inline ConnectivityReport report(const DirectedGraph &g, const ReportOptions &opts = {}) {
    ConnectivityReport r;
    r.stats = stats(g);
    const ComputeOptions compute{opts.threads};
    const UndirectedGraph u = underlying(g);
    if (g.vertex_count() < 2) {
        r.flags.push_back("trivial_graph");
        return r;
    }
    r.zeta0_underlying = undirected_vertex_connectivity(u, compute);
    r.zeta1_underlying = undirected_edge_connectivity(u, compute);
    if (r.zeta0_underlying != r.zeta1_underlying) r.flags.push_back("zeta0_differs_from_zeta1");

    const SccPartition parts = scc(g);
    if (parts.size() != 1) {
        r.flags.push_back("not_strongly_connected");
        std::vector<const VertexSet *> nontrivial;
        for (const auto &c : parts.components)
            if (c.size() >= 2) nontrivial.push_back(&c);
        std::sort(nontrivial.begin(), nontrivial.end(), [](const VertexSet *a, const VertexSet *b) {
            return a->size() != b->size() ? a->size() > b->size() : a->front() < b->front();
        });
        for (const VertexSet *c : nontrivial) {
            const VertexRemoval sub = induced(g, *c);
            ComponentReport cr{*c, report(sub.graph, opts)};
            detail::remap(cr.report, sub.new_to_old);
            r.components.push_back(std::move(cr));
        }
        return r;
    }

    r.sigma0 = svc(g, compute);
    r.sigma1 = sec(g, compute);
    if (!opts.enumerate) return r;

    EnumerationOptions eo = opts.enumeration;
    eo.threads = opts.threads;
    if (r.sigma0 >= 3 && !eo.allow_large_sigma)
        r.flags.push_back("vertex_enumeration_skipped_large_sigma");
    else
        r.vertex_witnesses = weakening_vertex_sets(g, eo);
    if (r.sigma1 >= 3 && !eo.allow_large_sigma)
        r.flags.push_back("edge_enumeration_skipped_large_sigma");
    else
        r.edge_witnesses = weakening_edge_sets(g, eo);
    if (r.vertex_witnesses && r.vertex_witnesses->capped) r.flags.push_back("vertex_witnesses_capped");
    if (r.edge_witnesses && r.edge_witnesses->capped) r.flags.push_back("edge_witnesses_capped");
    return r;
}

} // namespace svckit
