#include "corona/corona.hpp"

#include <stdexcept>

namespace corona {

CoronaGraph::CoronaGraph(Graph product, std::vector<Provenance> provenance,
                         std::vector<Edge> edge_order, std::vector<int> factor_sizes)
    : graph_(std::move(product)),
      provenance_(std::move(provenance)),
      edge_order_(std::move(edge_order)),
      factor_sizes_(std::move(factor_sizes)) {
    base_count_ = graph_.vertex_count();
    for (int s : factor_sizes_) base_count_ -= s;
    offsets_.reserve(factor_sizes_.size());
    int at = base_count_;
    for (int s : factor_sizes_) {
        offsets_.push_back(at);
        at += s;
    }
}

int CoronaGraph::satellite_offset(int edge_index) const {
    if (edge_index < 0 || edge_index >= factor_count())
        throw std::out_of_range("edge index " + std::to_string(edge_index) + " out of range");
    return offsets_[edge_index];
}

std::string CoronaGraph::describe_vertex(int product_vertex) const {
    const Provenance& p = provenance_.at(product_vertex);
    if (const auto* b = std::get_if<BaseVertex>(&p)) return "base " + std::to_string(b->g_vertex);
    const auto& s = std::get<SatelliteVertex>(p);
    return "satellite " + std::to_string(s.local_index) + " of edge " +
           std::to_string(s.edge_index);
}

CoronaGraph generalized_edge_corona(const Graph& g, const std::vector<Graph>& factors) {
    const int m = g.edge_count();
    if (static_cast<int>(factors.size()) != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " factors, got " +
                                    std::to_string(factors.size()));

    const int n = g.vertex_count();
    int total = n;
    for (const Graph& h : factors) total += h.vertex_count();

    std::vector<Provenance> provenance;
    provenance.reserve(total);
    for (int v = 0; v < n; ++v) provenance.push_back(BaseVertex{v});

    std::vector<Edge> edges = g.edges();
    std::vector<int> sizes;
    sizes.reserve(m);
    int offset = n;
    for (int i = 0; i < m; ++i) {
        const Graph& h = factors[i];
        const Edge e = g.edges()[i];
        const int ni = h.vertex_count();
        sizes.push_back(ni);
        for (int j = 0; j < ni; ++j) provenance.push_back(SatelliteVertex{i, j});
        for (const Edge& he : h.edges()) edges.push_back({offset + he.u, offset + he.v});
        for (int j = 0; j < ni; ++j) {
            edges.push_back({e.u, offset + j});
            edges.push_back({e.v, offset + j});
        }
        offset += ni;
    }

    return CoronaGraph(Graph(total, edges), std::move(provenance), g.edges(), std::move(sizes));
}

CoronaGraph edge_corona(const Graph& g, const Graph& h) {
    return generalized_edge_corona(g, std::vector<Graph>(g.edge_count(), h));
}

EdgeBlock edge_block(const CoronaGraph& cg, int edge_index) {
    if (edge_index < 0 || edge_index >= cg.factor_count())
        throw std::out_of_range("edge index " + std::to_string(edge_index) + " out of range");

    const Edge e = cg.edge_order()[edge_index];
    const int ni = cg.factor_sizes()[edge_index];
    const int offset = ni > 0 ? cg.satellite_offset(edge_index) : 0;

    std::vector<int> to_product = {e.u, e.v};
    for (int j = 0; j < ni; ++j) to_product.push_back(offset + j);

    // Induced subgraph; only intra-block pairs can be product edges.
    std::vector<Edge> edges;
    const Graph& p = cg.graph();
    for (std::size_t a = 0; a < to_product.size(); ++a)
        for (std::size_t b = a + 1; b < to_product.size(); ++b)
            if (p.has_edge(to_product[a], to_product[b]))
                edges.push_back({static_cast<int>(a), static_cast<int>(b)});

    return EdgeBlock{Graph(2 + ni, edges), std::move(to_product)};
}

std::pair<long long, long long> predicted_counts(long long n1, long long m1, long long n2,
                                                 long long m2) {
    return {n1 + m1 * n2, m1 * (1 + m2 + 2 * n2)};
}

std::string to_dot(const CoronaGraph& cg) {
    std::string out = "graph corona {\n";
    const int n = cg.graph().vertex_count();
    for (int v = 0; v < n; ++v) {
        const bool base = std::holds_alternative<BaseVertex>(cg.provenance()[v]);
        out += "  v" + std::to_string(v) + " [label=\"" + cg.describe_vertex(v) + "\", shape=" +
               (base ? "box, style=filled, fillcolor=lightgray" : "ellipse") + "];\n";
    }
    for (const Edge& e : cg.graph().edges())
        out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace corona
