#pragma once

// Graph generators: the Gamma(a, b) witness family (sigma0 = a while the
// underlying graph has vertex connectivity b), complete bidirected graphs,
// directed cycles and seeded random digraphs.

#include "svckit/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace svckit {

struct FamilyParams {
    std::size_t a = 1;
    std::size_t b = 1;
};

/// Every ordered pair of distinct vertices.
inline DirectedGraph doubled_complete(std::size_t n) {
    if (n < 2) throw InputError("doubled_complete: n must be at least 2");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) edges.push_back({u, v});
    return DirectedGraph(n, std::move(edges));
}

inline DirectedGraph directed_cycle(std::size_t n) {
    if (n < 2) throw InputError("directed_cycle: n must be at least 2");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return DirectedGraph(n, std::move(edges));
}

/// Vertex blocks of gamma(a, b), laid out as W, W', U, V with ascending ids.
struct GammaLayout {
    explicit GammaLayout(FamilyParams p) : a(p.a), b(p.b) {}

    std::size_t a, b;

    Vertex w(std::size_t i) const { return static_cast<Vertex>(i); }
    Vertex w_prime(std::size_t i) const { return static_cast<Vertex>(a + i); }
    Vertex u(std::size_t i) const { return static_cast<Vertex>(b + i); }
    Vertex v(std::size_t i) const { return static_cast<Vertex>(2 * b + 1 + i); }
    std::size_t vertex_count() const { return 3 * b + 2; }
};

/// The witness digraph for 1 <= a <= b.
///
/// a == b: the complete bidirected graph on b+1 vertices.
/// a <= b/2: the cyclic layering U -> W -> V -> W' -> U.
/// a > b/2: U <-> W <-> V bidirected, plus U -> W' -> V.
///
/// |U| = |V| = b+1, |W| = a, |W'| = b-a. Vertices are labelled by block
/// ("W1", "W'1", "U1", "V1", ...), except in the complete case.
inline DirectedGraph gamma(FamilyParams p) {
    if (p.a < 1 || p.a > p.b)
        throw InputError("gamma: parameters must satisfy 1 <= a <= b (got a=" + std::to_string(p.a) +
                         ", b=" + std::to_string(p.b) + ")");
    if (p.a == p.b) return doubled_complete(p.b + 1);

    const GammaLayout at(p);
    const std::size_t big = p.b + 1, hub = p.a, side = p.b - p.a;
    std::vector<Edge> edges;
    auto connect = [&](auto from, std::size_t from_count, auto to, std::size_t to_count) {
        for (std::size_t i = 0; i < from_count; ++i)
            for (std::size_t j = 0; j < to_count; ++j) edges.push_back({from(i), to(j)});
    };
    auto U = [&](std::size_t i) { return at.u(i); };
    auto V = [&](std::size_t i) { return at.v(i); };
    auto W = [&](std::size_t i) { return at.w(i); };
    auto Wp = [&](std::size_t i) { return at.w_prime(i); };

    if (2 * p.a <= p.b) {
        connect(U, big, W, hub);
        connect(W, hub, V, big);
        connect(V, big, Wp, side);
        connect(Wp, side, U, big);
    } else {
        connect(U, big, W, hub);
        connect(W, hub, U, big);
        connect(W, hub, V, big);
        connect(V, big, W, hub);
        connect(U, big, Wp, side);
        connect(Wp, side, V, big);
    }

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < hub; ++i) labels.push_back("W" + std::to_string(i + 1));
    for (std::size_t i = 0; i < side; ++i) labels.push_back("W'" + std::to_string(i + 1));
    for (std::size_t i = 0; i < big; ++i) labels.push_back("U" + std::to_string(i + 1));
    for (std::size_t i = 0; i < big; ++i) labels.push_back("V" + std::to_string(i + 1));
    return DirectedGraph(at.vertex_count(), std::move(edges), std::move(labels));
}

/// Each ordered pair (u, v), u != v, is present independently with the given
/// probability. The coin flips use the raw 64-bit engine output so the graph
/// for a seed is identical on every standard library.
inline DirectedGraph random_digraph(std::size_t n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw InputError("random_digraph: n must be at least 1");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw InputError("random_digraph: probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < edge_probability) edges.push_back({u, v});
        }
    return DirectedGraph(n, std::move(edges));
}

} // namespace svckit
