#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

/// Search budget; at least one of the two limits must be finite.
struct Budget {
    std::optional<std::int64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;

    Budget(std::optional<std::int64_t> nodes, std::optional<std::chrono::milliseconds> time);

    static Budget nodes(std::int64_t n) { return Budget(n, std::nullopt); }
    static Budget wall(std::chrono::milliseconds t) { return Budget(std::nullopt, t); }
};

/// Coloring where vertices within distance k share no color. k = 1 is a
/// proper coloring.
struct KColoring {
    int k = 1;
    std::vector<int> colors;  // colors[v], one entry per vertex
};
struct IndependentSet {
    std::vector<int> vertices;
};
struct VertexCover {
    std::vector<int> vertices;
};
struct DominatingSet {
    std::vector<int> vertices;
};
struct Matching {
    std::vector<Edge> edges;
};

using Certificate =
    std::variant<KColoring, IndependentSet, VertexCover, DominatingSet, Matching>;

/// True iff the certificate satisfies its defining condition on g, checked
/// directly from the definitions (colorings are validated against BFS
/// distances, not against any power-graph construction). A certificate that
/// references vertices or edges outside g is rejected with
/// std::invalid_argument — distinct from returning false.
bool check_certificate(const Graph& g, const Certificate& c);

/// Exact solver output. The witness is always feasible; when exact is true
/// the search additionally proves optimality and lower == upper == value.
/// On budget exhaustion exact is false and [lower, upper] is a certified
/// bracket containing the true optimum, with the witness on the feasible
/// side.
struct ExactResult {
    int value = 0;
    Certificate witness;
    bool exact = true;
    int lower = 0;
    int upper = 0;
    std::int64_t nodes_explored = 0;
};

/// Minimum proper coloring via DSATUR branch-and-bound with a greedy clique
/// lower bound. seed_clique, when given, must be pairwise adjacent in g and
/// is used to strengthen the lower bound (validated, throws otherwise).
/// Deterministic: all tie-breaks resolve by lowest vertex index.
ExactResult chromatic_number(const Graph& g, const Budget& budget,
                             std::span<const int> seed_clique = {});

/// chi_{<=k}: chromatic number of the k-th power, with the witness expressed
/// on g's vertices. seed_clique vertices must be pairwise within distance k.
ExactResult k_distance_chromatic(const Graph& g, int k, const Budget& budget,
                                 std::span<const int> seed_clique = {});

/// Maximum independent set; branches on the highest-degree vertex with a
/// greedy clique-cover upper bound.
ExactResult independence_number(const Graph& g, const Budget& budget);

/// beta = n - alpha (Gallai); the witness is the complement of the
/// independence witness.
ExactResult vertex_cover_number(const Graph& g, const Budget& budget);

/// Minimum dominating set; branches over the candidate dominators of the
/// most constrained uncovered vertex. Isolated vertices count themselves.
ExactResult domination_number(const Graph& g, const Budget& budget);

/// Maximum matching by inclusion/exclusion over the edge list with the
/// floor(n/2) bound and greedy extension pruning. Desk-scale graphs only.
ExactResult matching_number(const Graph& g, const Budget& budget);

}  // namespace corona
