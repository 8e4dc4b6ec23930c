#pragma once

#include "svckit/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace svckit {

struct SccPartition {
    std::vector<std::size_t> component_of;
    // Reverse topological order of the condensation: every edge between two
    // components goes from a higher index to a lower one. Members are sorted.
    std::vector<VertexSet> components;

    std::size_t size() const noexcept { return components.size(); }
};

struct Condensation {
    DirectedGraph dag;
    std::vector<std::size_t> sizes;
};

/// Tarjan's algorithm with an explicit call stack. Roots are tried in
/// ascending id order and successors in ascending order, so the output is a
/// pure function of g.
inline SccPartition scc(const DirectedGraph &g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);

    SccPartition result;
    result.component_of.assign(n, unvisited);

    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> calls;
    std::size_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        calls.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!calls.empty()) {
            Frame &f = calls.back();
            auto succ = g.out(f.v);
            if (f.next < succ.size()) {
                Vertex w = succ[f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }

            const Vertex v = f.v;
            calls.pop_back();
            if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
            if (low[v] != index[v]) continue;

            VertexSet component;
            Vertex w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                result.component_of[w] = result.components.size();
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            result.components.push_back(std::move(component));
        }
    }
    return result;
}

inline bool is_strongly_connected(const DirectedGraph &g) {
    return g.vertex_count() >= 1 && scc(g).size() == 1;
}

inline Condensation condensation(const DirectedGraph &g, const SccPartition &parts) {
    Condensation c;
    std::vector<Edge> edges;
    for (const Edge &e : g.edges()) {
        const std::size_t a = parts.component_of[e.from], b = parts.component_of[e.to];
        if (a != b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    c.dag = DirectedGraph(parts.size(), std::move(edges));
    for (const auto &comp : parts.components) c.sizes.push_back(comp.size());
    return c;
}

inline Condensation condensation(const DirectedGraph &g) { return condensation(g, scc(g)); }

/// Component sizes in descending order.
inline std::vector<std::size_t> scc_sizes(const DirectedGraph &g) {
    std::vector<std::size_t> sizes;
    for (const auto &comp : scc(g).components) sizes.push_back(comp.size());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

/// Largest component; ties go to the component holding the smallest id.
inline VertexSet largest_scc(const DirectedGraph &g) {
    auto parts = scc(g);
    const VertexSet *best = nullptr;
    for (const auto &comp : parts.components)
        if (!best || comp.size() > best->size() ||
            (comp.size() == best->size() && comp.front() < best->front()))
            best = &comp;
    return best ? *best : VertexSet{};
}

} // namespace svckit
