#pragma once

// Strong articulation points and strong bridges of a strongly connected
// digraph, found through dominator trees of the flow graphs G(r) and G^R(r).
// For v != r, g - v fails to be strongly connected iff v dominates some other
// vertex in G(r) or in G^R(r); edges are handled by subdividing each edge
// with a midpoint node and asking the same question about the midpoint.

#include "svckit/graph.hpp"
#include "svckit/scc.hpp"

#include <cstddef>
#include <vector>

namespace svckit::detail {

template <typename Succ, typename Pred>
std::vector<Vertex> immediate_dominators(std::size_t n, Vertex root, Succ &&succ, Pred &&pred) {
    // Iterative DFS postorder.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> post(n, none);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> order; // postorder
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
        Frame &f = stack.back();
        auto row = succ(f.v);
        if (f.next < row.size()) {
            Vertex w = row[f.next++];
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back({w, 0});
            }
            continue;
        }
        post[f.v] = order.size();
        order.push_back(f.v);
        stack.pop_back();
    }

    std::vector<Vertex> idom(n, kNoVertex);
    idom[root] = root;
    auto intersect = [&](Vertex a, Vertex b) {
        while (a != b) {
            while (post[a] < post[b]) a = idom[a];
            while (post[b] < post[a]) b = idom[b];
        }
        return a;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Vertex v = *it;
            if (v == root) continue;
            Vertex candidate = kNoVertex;
            for (Vertex p : pred(v)) {
                if (idom[p] == kNoVertex) continue;
                candidate = candidate == kNoVertex ? p : intersect(p, candidate);
            }
            if (idom[v] != candidate) {
                idom[v] = candidate;
                changed = true;
            }
        }
    }
    return idom;
}

/// Vertices whose removal leaves g not strongly connected, ascending.
/// Requires g strongly connected with at least 3 vertices.
inline VertexSet strong_articulation_points(const DirectedGraph &g) {
    const std::size_t n = g.vertex_count();
    const Vertex root = 0;
    std::vector<bool> hit(n, false);

    const Vertex only_root[] = {root};
    hit[root] = !is_strongly_connected(remove_vertices(g, only_root).graph);

    auto mark = [&](const std::vector<Vertex> &idom) {
        for (Vertex v = 0; v < n; ++v)
            if (v != root && idom[v] != root && idom[v] != kNoVertex) hit[idom[v]] = true;
    };
    mark(immediate_dominators(
        n, root, [&](Vertex v) { return g.out(v); }, [&](Vertex v) { return g.in(v); }));
    mark(immediate_dominators(
        n, root, [&](Vertex v) { return g.in(v); }, [&](Vertex v) { return g.out(v); }));

    VertexSet result;
    for (Vertex v = 0; v < n; ++v)
        if (hit[v]) result.push_back(v);
    return result;
}

/// Edges whose removal leaves g not strongly connected, in edges() order.
/// Requires g strongly connected with at least 2 vertices.
inline EdgeSet strong_bridges(const DirectedGraph &g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    const auto edges = g.edges();

    // Subdivided graph: original vertices 0..n-1, midpoint of edge i is n+i.
    std::vector<std::pair<Vertex, Vertex>> forward;
    forward.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto mid = static_cast<Vertex>(n + i);
        forward.emplace_back(edges[i].from, mid);
        forward.emplace_back(mid, edges[i].to);
    }
    std::vector<std::pair<Vertex, Vertex>> backward;
    backward.reserve(2 * m);
    for (const auto &[a, b] : forward) backward.emplace_back(b, a);
    std::sort(forward.begin(), forward.end());
    std::sort(backward.begin(), backward.end());
    const Csr succ = build_csr(n + m, forward);
    const Csr pred = build_csr(n + m, backward);

    std::vector<bool> bridge(m, false);
    auto mark = [&](const std::vector<Vertex> &idom) {
        for (Vertex v = 0; v < n; ++v)
            if (idom[v] != kNoVertex && idom[v] >= n) bridge[idom[v] - n] = true;
    };
    const Vertex root = 0;
    mark(immediate_dominators(
        n + m, root, [&](Vertex v) { return succ.row(v); }, [&](Vertex v) { return pred.row(v); }));
    mark(immediate_dominators(
        n + m, root, [&](Vertex v) { return pred.row(v); }, [&](Vertex v) { return succ.row(v); }));

    EdgeSet result;
    for (std::size_t i = 0; i < m; ++i)
        if (bridge[i]) result.push_back(edges[i]);
    return result;
}

} // namespace svckit::detail
