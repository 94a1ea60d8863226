#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

#include "corona/bits.hpp"
#include "corona/graph.hpp"
#include "corona/solvers.hpp"

namespace corona::detail {

/// Per-call budget clock shared by the branch-and-bound searches. One step
/// per search-tree node; the wall clock is sampled every 1024 nodes.
struct Ticker {
    explicit Ticker(const Budget& b)
        : limit(b.max_nodes.value_or(std::numeric_limits<std::int64_t>::max())) {
        if (b.max_time) deadline = std::chrono::steady_clock::now() + *b.max_time;
    }

    bool step() {
        if (stopped) return false;
        ++nodes;
        if (nodes > limit) {
            stopped = true;
        } else if (deadline && (nodes & 1023) == 0 &&
                   std::chrono::steady_clock::now() > *deadline) {
            stopped = true;
        }
        return !stopped;
    }

    std::int64_t limit;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::int64_t nodes = 0;
    bool stopped = false;
};

inline std::vector<Bits> adjacency_bits(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bits> adj(n, Bits(n));
    for (const Edge& e : g.edges()) {
        adj[e.u].set(e.v);
        adj[e.v].set(e.u);
    }
    return adj;
}

inline std::vector<Bits> closed_neighborhood_bits(const Graph& g) {
    std::vector<Bits> closed = adjacency_bits(g);
    for (int v = 0; v < g.vertex_count(); ++v) closed[v].set(v);
    return closed;
}

}  // namespace corona::detail
