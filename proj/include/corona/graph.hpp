#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace corona {

/// Unordered vertex pair stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes an endpoint pair into u < v order. Rejects self-loops.
Edge make_edge(int a, int b);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are normalized (u < v), deduplicated, and kept in first-seen order.
/// That order is the assignment contract consumed by the corona
/// construction. Equality compares vertex count and the ordered edge list.
class Graph {
  public:
    Graph() = default;

    /// Validates, normalizes and deduplicates. Throws std::invalid_argument
    /// naming the offending pair on a self-loop or out-of-range endpoint.
    Graph(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    /// Neighbors in ascending order.
    const std::vector<int>& neighbors(int v) const;
    int max_degree() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Spec-facing constructor: pairs in any orientation, duplicates collapse.
Graph build_graph(int vertex_count, const std::vector<Edge>& edge_list);

/// True when both graphs have the same vertex count and edge set,
/// irrespective of the stored edge order.
bool same_edge_set(const Graph& a, const Graph& b);

/// All-pairs BFS hop distances. Unreachable pairs are an explicit empty
/// value, never a large integer.
class DistanceMatrix {
  public:
    int size() const { return n_; }

    /// Distance between u and v, or nullopt when unreachable.
    std::optional<int> operator()(int u, int v) const;
    bool reachable(int u, int v) const;

  private:
    friend DistanceMatrix distance_matrix(const Graph&);
    explicit DistanceMatrix(int n);

    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

    int n_ = 0;
    std::vector<int> d_;  // -1 marks unreachable
};

DistanceMatrix distance_matrix(const Graph& g);

/// Eccentricities, diameter and radius. On a disconnected graph all three
/// are the unreachable marker and connected is false.
struct MetricSummary {
    std::vector<std::optional<int>> eccentricity;
    std::optional<int> diameter;
    std::optional<int> radius;
    bool connected = false;
};

MetricSummary metric_summary(const Graph& g);

/// k-th power: same vertices, edge {u,v} iff 1 <= d(u,v) <= k. A proper
/// coloring of the k-th power is exactly a k-distance coloring of g.
Graph power_graph(const Graph& g, int k);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

/// When g is a complete bipartite graph with both sides nonempty, returns
/// the two sides (side containing vertex 0 first); otherwise nullopt.
std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_parts(
    const Graph& g);

}  // namespace corona
