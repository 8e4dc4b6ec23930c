#pragma once

#include "svckit/families.hpp"
#include "svckit/graph.hpp"
#include "svckit/scc.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace svckit::testing {

inline DirectedGraph digraph(std::size_t n, std::initializer_list<Edge> edges) {
    return DirectedGraph(n, std::vector<Edge>(edges));
}

/// Seeded random digraphs for a given (n, p) that happen to be strongly connected.
inline std::vector<DirectedGraph> strongly_connected_samples(std::size_t n, double p, std::size_t count,
                                                             std::uint64_t seed) {
    std::vector<DirectedGraph> out;
    for (std::uint64_t s = seed; out.size() < count && s < seed + 100000; ++s) {
        DirectedGraph g = random_digraph(n, p, s);
        if (is_strongly_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

inline UndirectedGraph random_undirected(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.push_back({u, v});
    return UndirectedGraph(n, std::move(edges));
}

} // namespace svckit::testing
