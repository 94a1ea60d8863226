#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

/// Vertex of the base graph G, carried into the product.
struct BaseVertex {
    int g_vertex;
};

/// Vertex of factor H_i attached to edge i, with its index inside H_i.
struct SatelliteVertex {
    int edge_index;
    int local_index;
};

using Provenance = std::variant<BaseVertex, SatelliteVertex>;

/// The generalized edge corona product G <> (H_1, ..., H_m) together with
/// per-vertex provenance and the edge order the factors were assigned to.
///
/// Vertex layout: base vertices 0..n-1 in G's order, then one satellite
/// block per edge in edge order, each block in its factor's local order.
class CoronaGraph {
  public:
    CoronaGraph(Graph product, std::vector<Provenance> provenance, std::vector<Edge> edge_order,
                std::vector<int> factor_sizes);

    const Graph& graph() const { return graph_; }
    const std::vector<Provenance>& provenance() const { return provenance_; }
    const std::vector<Edge>& edge_order() const { return edge_order_; }
    const std::vector<int>& factor_sizes() const { return factor_sizes_; }

    int base_vertex_count() const { return base_count_; }
    int factor_count() const { return static_cast<int>(edge_order_.size()); }

    /// Product id of the first satellite of block i (meaningful when the
    /// block is nonempty).
    int satellite_offset(int edge_index) const;

    /// Human-readable provenance, e.g. "base 3" or "satellite 1 of edge 2".
    std::string describe_vertex(int product_vertex) const;

  private:
    Graph graph_;
    std::vector<Provenance> provenance_;
    std::vector<Edge> edge_order_;
    std::vector<int> factor_sizes_;
    std::vector<int> offsets_;
    int base_count_;
};

/// Joins both endpoints of G's i-th edge to every vertex of factors[i].
/// Factors may have zero vertices (the edge keeps no satellites).
/// Throws std::invalid_argument when factors.size() != |E(G)|.
CoronaGraph generalized_edge_corona(const Graph& g, const std::vector<Graph>& factors);

/// Edge corona with one copy of h per edge of g.
CoronaGraph edge_corona(const Graph& g, const Graph& h);

/// Subgraph of the product induced on edge i's endpoints and its satellites,
/// with the mapping back to product vertex ids. Local layout: 0 and 1 are
/// the endpoints (u < v), then the satellites in local order.
struct EdgeBlock {
    Graph block;
    std::vector<int> to_product;
};

EdgeBlock edge_block(const CoronaGraph& cg, int edge_index);

/// Closed-form product size: (n1 + m1*n2, m1*(1 + m2 + 2*n2)).
std::pair<long long, long long> predicted_counts(long long n1, long long m1, long long n2,
                                                 long long m2);

/// Graphviz DOT rendering with base vertices boxed and satellites round.
/// Debug aid, not a stability contract.
std::string to_dot(const CoronaGraph& cg);

}  // namespace corona
