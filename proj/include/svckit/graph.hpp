#pragma once

// Core graph representations and structural transforms.
//
// Both graph types are immutable value types. Vertices are the dense ids
// 0..n-1; edges are kept in a sorted, duplicate-free vector and mirrored in
// compressed out/in adjacency arrays.

#include "svckit/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace svckit {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<Edge>;

namespace detail {

// Compressed adjacency: neighbours of v are targets[offsets[v] .. offsets[v+1]).
struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<Vertex> targets;

    std::span<const Vertex> row(Vertex v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

// `pairs` must be sorted by first component.
inline Csr build_csr(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &pairs) {
    Csr csr;
    csr.offsets.assign(n + 1, 0);
    csr.targets.reserve(pairs.size());
    for (const auto &[a, b] : pairs) {
        ++csr.offsets[a + 1];
        csr.targets.push_back(b);
    }
    for (std::size_t v = 0; v < n; ++v) csr.offsets[v + 1] += csr.offsets[v];
    return csr;
}

inline void check_vertex(Vertex v, std::size_t n, const char *what) {
    if (v >= n)
        throw InputError(std::string(what) + ": vertex id " + std::to_string(v) +
                         " out of range (n = " + std::to_string(n) + ")");
}

} // namespace detail

/// Simple digraph: no self-loops, no parallel edges.
class DirectedGraph {
  public:
    DirectedGraph() : DirectedGraph(0) {}

    /// Duplicate edges collapse; self-loops and out-of-range endpoints throw
    /// InputError. `labels` is either empty or has exactly n entries.
    explicit DirectedGraph(std::size_t n, std::vector<Edge> edges = {},
                           std::vector<std::string> labels = {})
        : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
        if (!labels_.empty() && labels_.size() != n_)
            throw InputError("label count " + std::to_string(labels_.size()) +
                             " does not match vertex count " + std::to_string(n_));
        for (const Edge &e : edges_) {
            detail::check_vertex(e.from, n_, "edge");
            detail::check_vertex(e.to, n_, "edge");
            if (e.from == e.to)
                throw InputError("self-loop at vertex " + std::to_string(e.from));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(edges_.size());
        for (const Edge &e : edges_) pairs.emplace_back(e.from, e.to);
        out_ = detail::build_csr(n_, pairs);
        for (auto &p : pairs) std::swap(p.first, p.second);
        std::sort(pairs.begin(), pairs.end());
        in_ = detail::build_csr(n_, pairs);
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// All edges in ascending (from, to) order.
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Vertex> out(Vertex v) const { return out_.row(v); }
    std::span<const Vertex> in(Vertex v) const { return in_.row(v); }
    std::size_t out_degree(Vertex v) const { return out(v).size(); }
    std::size_t in_degree(Vertex v) const { return in(v).size(); }

    /// Position of (u, v) in edges(), if present. Edges leaving u occupy a
    /// contiguous block starting at out_offset(u).
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
        if (u >= n_ || v >= n_) return std::nullopt;
        auto row = out(u);
        auto it = std::lower_bound(row.begin(), row.end(), v);
        if (it == row.end() || *it != v) return std::nullopt;
        return out_.offsets[u] + static_cast<std::size_t>(it - row.begin());
    }
    std::size_t out_offset(Vertex u) const { return out_.offsets[u]; }

    bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

    bool has_labels() const noexcept { return !labels_.empty(); }
    std::span<const std::string> labels() const noexcept { return labels_; }

    /// External name of v, or its decimal id when the graph is unlabelled.
    std::string label(Vertex v) const {
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    friend bool operator==(const DirectedGraph &a, const DirectedGraph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

  private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    detail::Csr out_;
    detail::Csr in_;
};

/// Simple undirected graph. Edges are stored normalised with from < to.
class UndirectedGraph {
  public:
    UndirectedGraph() : UndirectedGraph(0) {}

    explicit UndirectedGraph(std::size_t n, std::vector<Edge> edges = {}) : n_(n), edges_(std::move(edges)) {
        for (Edge &e : edges_) {
            detail::check_vertex(e.from, n_, "edge");
            detail::check_vertex(e.to, n_, "edge");
            if (e.from == e.to)
                throw InputError("self-loop at vertex " + std::to_string(e.from));
            if (e.from > e.to) std::swap(e.from, e.to);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(2 * edges_.size());
        for (const Edge &e : edges_) {
            pairs.emplace_back(e.from, e.to);
            pairs.emplace_back(e.to, e.from);
        }
        std::sort(pairs.begin(), pairs.end());
        adj_ = detail::build_csr(n_, pairs);
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.row(v); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u >= n_ || v >= n_) return false;
        auto row = neighbors(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    friend bool operator==(const UndirectedGraph &a, const UndirectedGraph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    std::size_t n_;
    std::vector<Edge> edges_;
    detail::Csr adj_;
};

/// Result of deleting vertices: the remaining graph plus the id mapping.
struct VertexRemoval {
    DirectedGraph graph;
    std::vector<Vertex> old_to_new; // kNoVertex for removed vertices
    std::vector<Vertex> new_to_old;
};

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    // Degrees in the underlying undirected graph.
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::size_t min_in = 0;
    std::size_t max_in = 0;
    std::size_t min_out = 0;
    std::size_t max_out = 0;
    // Longest shortest directed path; nullopt when some ordered pair is unreachable.
    std::optional<std::size_t> diameter;

    friend bool operator==(const GraphStats &, const GraphStats &) = default;
};

inline UndirectedGraph underlying(const DirectedGraph &g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    return UndirectedGraph(g.vertex_count(), std::move(edges));
}

inline DirectedGraph doubled(const UndirectedGraph &d) {
    std::vector<Edge> edges;
    edges.reserve(2 * d.edge_count());
    for (const Edge &e : d.edges()) {
        edges.push_back({e.from, e.to});
        edges.push_back({e.to, e.from});
    }
    return DirectedGraph(d.vertex_count(), std::move(edges));
}

/// g - s. Surviving vertices keep their relative order, so lexicographic
/// order on vertex sets is preserved by the mapping.
inline VertexRemoval remove_vertices(const DirectedGraph &g, std::span<const Vertex> s) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> gone(n, false);
    for (Vertex v : s) {
        detail::check_vertex(v, n, "remove_vertices");
        gone[v] = true;
    }
    VertexRemoval result;
    result.old_to_new.assign(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
        if (gone[v]) continue;
        result.old_to_new[v] = static_cast<Vertex>(result.new_to_old.size());
        result.new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge &e : g.edges())
        if (!gone[e.from] && !gone[e.to])
            edges.push_back({result.old_to_new[e.from], result.old_to_new[e.to]});
    std::vector<std::string> labels;
    if (g.has_labels())
        for (Vertex v : result.new_to_old) labels.push_back(g.labels()[v]);
    result.graph = DirectedGraph(result.new_to_old.size(), std::move(edges), std::move(labels));
    return result;
}

inline DirectedGraph remove_edges(const DirectedGraph &g, std::span<const Edge> s) {
    std::vector<bool> gone(g.edge_count(), false);
    for (const Edge &e : s) {
        auto idx = g.edge_index(e.from, e.to);
        if (!idx)
            throw InputError("remove_edges: edge (" + std::to_string(e.from) + "," +
                             std::to_string(e.to) + ") not present");
        gone[*idx] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!gone[i]) edges.push_back(g.edges()[i]);
    return DirectedGraph(g.vertex_count(), std::move(edges),
                         std::vector<std::string>(g.labels().begin(), g.labels().end()));
}

/// g[u]: the subgraph induced by u, ids remapped in ascending order.
inline VertexRemoval induced(const DirectedGraph &g, std::span<const Vertex> u) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> keep(n, false);
    for (Vertex v : u) {
        detail::check_vertex(v, n, "induced");
        keep[v] = true;
    }
    VertexSet complement;
    for (Vertex v = 0; v < n; ++v)
        if (!keep[v]) complement.push_back(v);
    return remove_vertices(g, complement);
}

inline GraphStats stats(const DirectedGraph &g) {
    GraphStats st;
    st.n = g.vertex_count();
    st.m = g.edge_count();
    if (st.n == 0) return st;

    const UndirectedGraph u = underlying(g);
    st.min_degree = st.min_in = st.min_out = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < st.n; ++v) {
        st.min_degree = std::min(st.min_degree, u.degree(v));
        st.max_degree = std::max(st.max_degree, u.degree(v));
        st.min_in = std::min(st.min_in, g.in_degree(v));
        st.max_in = std::max(st.max_in, g.in_degree(v));
        st.min_out = std::min(st.min_out, g.out_degree(v));
        st.max_out = std::max(st.max_out, g.out_degree(v));
    }

    std::size_t diameter = 0;
    std::vector<std::size_t> dist(st.n);
    std::vector<Vertex> queue(st.n);
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    for (Vertex s = 0; s < st.n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        std::size_t head = 0, tail = 0;
        dist[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex v = queue[head++];
            for (Vertex w : g.out(v))
                if (dist[w] == unseen) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
        }
        if (tail != st.n) return st; // diameter stays unbounded
        diameter = std::max(diameter, dist[queue[tail - 1]]);
    }
    st.diameter = diameter;
    return st;
}

} // namespace svckit
