#pragma once

// Unit-capacity maximum flow (blocking-flow / Dinic) and the two Menger
// quantities built on it: edge-disjoint and internally vertex-disjoint path
// counts between an ordered vertex pair.

#include "svckit/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace svckit {

struct FlowAnswer {
    /// Number of disjoint s->t paths found (equal to the cap when saturated).
    std::size_t value = 0;
    /// Minimum cut certificate, filled only when !saturated. Exactly one of
    /// the two is used, depending on the flow mode.
    VertexSet vertex_cut;
    EdgeSet edge_cut;
    /// The search stopped because the flow reached the caller's cap.
    bool saturated = false;
};

namespace detail {

/// Residual network with paired arcs: arc i and arc i^1 are mutual reverses.
class FlowNetwork {
  public:
    using Node = std::uint32_t;

    explicit FlowNetwork(std::size_t nodes) : adjacency_(nodes), level_(nodes), next_(nodes) {}

    std::size_t add_arc(Node from, Node to, std::uint32_t capacity) {
        const std::size_t id = arcs_.size();
        arcs_.push_back({to, capacity});
        arcs_.push_back({from, 0});
        adjacency_[from].push_back(static_cast<std::uint32_t>(id));
        adjacency_[to].push_back(static_cast<std::uint32_t>(id + 1));
        return id;
    }

    /// Pushes flow from source to sink until none is left or `limit` is reached.
    std::size_t max_flow(Node source, Node sink, std::size_t limit) {
        std::size_t total = 0;
        while (total < limit && build_levels(source, sink)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (total < limit) {
                const std::size_t pushed = augment(source, sink, limit - total);
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

    /// Nodes reachable from source through arcs with spare capacity.
    std::vector<bool> residual_reachable(Node source) const {
        std::vector<bool> seen(adjacency_.size(), false);
        std::vector<Node> queue{source};
        seen[source] = true;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::uint32_t a : adjacency_[queue[head]]) {
                const Arc &arc = arcs_[a];
                if (arc.residual > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        return seen;
    }

  private:
    struct Arc {
        Node to;
        std::uint32_t residual;
    };

    static constexpr std::int32_t kDead = -1;

    bool build_levels(Node source, Node sink) {
        std::fill(level_.begin(), level_.end(), kDead);
        std::vector<Node> queue{source};
        level_[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Node v = queue[head];
            for (std::uint32_t a : adjacency_[v]) {
                const Arc &arc = arcs_[a];
                if (arc.residual > 0 && level_[arc.to] == kDead) {
                    level_[arc.to] = level_[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        return level_[sink] != kDead;
    }

    // One augmenting path in the level graph, found by an iterative DFS that
    // retires dead-end nodes. Returns the amount pushed (0 if none).
    std::size_t augment(Node source, Node sink, std::size_t limit) {
        path_.clear();
        Node v = source;
        while (true) {
            if (v == sink) {
                std::size_t bottleneck = limit;
                for (std::uint32_t a : path_) bottleneck = std::min<std::size_t>(bottleneck, arcs_[a].residual);
                for (std::uint32_t a : path_) {
                    arcs_[a].residual -= static_cast<std::uint32_t>(bottleneck);
                    arcs_[a ^ 1u].residual += static_cast<std::uint32_t>(bottleneck);
                }
                return bottleneck;
            }
            auto &row = adjacency_[v];
            std::size_t &i = next_[v];
            while (i < row.size()) {
                const Arc &arc = arcs_[row[i]];
                if (arc.residual > 0 && level_[arc.to] == level_[v] + 1) break;
                ++i;
            }
            if (i < row.size()) {
                path_.push_back(row[i]);
                v = arcs_[row[i]].to;
                continue;
            }
            level_[v] = kDead;
            if (path_.empty()) return 0;
            const std::uint32_t back = path_.back();
            path_.pop_back();
            v = arcs_[back ^ 1u].to;
            ++next_[v];
        }
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::vector<std::int32_t> level_;
    std::vector<std::size_t> next_;
    std::vector<std::uint32_t> path_;
};

inline void check_pair(const DirectedGraph &g, Vertex s, Vertex t, const char *what) {
    check_vertex(s, g.vertex_count(), what);
    check_vertex(t, g.vertex_count(), what);
    if (s == t) throw InputError(std::string(what) + ": source equals target");
}

inline std::size_t flow_limit(std::optional<std::size_t> cap) {
    return cap.value_or(std::numeric_limits<std::size_t>::max());
}

} // namespace detail

/// Maximum number of pairwise edge-disjoint s->t paths.
inline FlowAnswer edge_max_flow(const DirectedGraph &g, Vertex s, Vertex t,
                                std::optional<std::size_t> cap = std::nullopt) {
    detail::check_pair(g, s, t, "edge_max_flow");
    detail::FlowNetwork net(g.vertex_count());
    for (const Edge &e : g.edges()) net.add_arc(e.from, e.to, 1);

    const std::size_t limit = detail::flow_limit(cap);
    FlowAnswer answer;
    answer.value = net.max_flow(s, t, limit);
    if (cap && answer.value >= *cap) {
        answer.saturated = true;
        return answer;
    }
    const auto reach = net.residual_reachable(s);
    for (const Edge &e : g.edges())
        if (reach[e.from] && !reach[e.to]) answer.edge_cut.push_back(e);
    return answer;
}

/// Maximum number of internally vertex-disjoint s->t paths, via the split
/// transform: w becomes w_in -> w_out with capacity 1 for every w other than
/// s and t, and every edge (a, b) becomes a_out -> b_in with capacity large
/// enough never to be cut.
///
/// Throws InputError when s == t or when the edge (s, t) exists, since then no
/// vertex set separates t from s.
inline FlowAnswer vertex_max_flow(const DirectedGraph &g, Vertex s, Vertex t,
                                  std::optional<std::size_t> cap = std::nullopt) {
    detail::check_pair(g, s, t, "vertex_max_flow");
    if (g.has_edge(s, t))
        throw InputError("vertex_max_flow: edge (" + std::to_string(s) + "," + std::to_string(t) +
                         ") present, no separating vertex cut exists");

    const std::size_t n = g.vertex_count();
    auto in_node = [](Vertex v) { return 2 * v; };
    auto out_node = [](Vertex v) { return 2 * v + 1; };
    const auto wide = static_cast<std::uint32_t>(n);

    detail::FlowNetwork net(2 * n);
    for (Vertex w = 0; w < n; ++w)
        if (w != s && w != t) net.add_arc(in_node(w), out_node(w), 1);
    for (const Edge &e : g.edges()) {
        if (e.to == s || e.from == t) continue;
        net.add_arc(out_node(e.from), in_node(e.to), wide);
    }

    FlowAnswer answer;
    answer.value = net.max_flow(out_node(s), in_node(t), detail::flow_limit(cap));
    if (cap && answer.value >= *cap) {
        answer.saturated = true;
        return answer;
    }
    const auto reach = net.residual_reachable(out_node(s));
    for (Vertex w = 0; w < n; ++w)
        if (w != s && w != t && reach[in_node(w)] && !reach[out_node(w)]) answer.vertex_cut.push_back(w);
    return answer;
}

} // namespace svckit
