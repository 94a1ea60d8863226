#include "corona/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace corona {

namespace {

std::string pair_text(int a, int b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop " + pair_text(a, b) + " rejected");
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n_);
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        Edge e = make_edge(raw.u, raw.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge " + pair_text(raw.u, raw.v) + " out of range for " +
                                        std::to_string(n_) + " vertices");
        if (has_edge(e.u, e.v)) continue;  // set semantics, first occurrence wins
        edges_.push_back(e);
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for " +
                                std::to_string(n_) + " vertices");
}

Graph build_graph(int vertex_count, const std::vector<Edge>& edge_list) {
    return Graph(vertex_count, edge_list);
}

bool same_edge_set(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<Edge> ea = a.edges(), eb = b.edges();
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}

std::optional<int> DistanceMatrix::operator()(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("distance query out of range");
    const int d = at(u, v);
    if (d < 0) return std::nullopt;
    return d;
}

bool DistanceMatrix::reachable(int u, int v) const { return (*this)(u, v).has_value(); }

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        auto* row = dm.d_.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dm;
}

MetricSummary metric_summary(const Graph& g) {
    const int n = g.vertex_count();
    MetricSummary s;
    s.eccentricity.assign(n, std::nullopt);
    if (n == 0) {
        s.connected = true;
        return s;
    }
    const DistanceMatrix dm = distance_matrix(g);
    bool connected = true;
    std::vector<int> ecc(n, 0);
    for (int u = 0; u < n && connected; ++u) {
        for (int v = 0; v < n; ++v) {
            const auto d = dm(u, v);
            if (!d) {
                connected = false;
                break;
            }
            ecc[u] = std::max(ecc[u], *d);
        }
    }
    s.connected = connected;
    if (!connected) return s;
    int dia = 0, rad = ecc[0];
    for (int u = 0; u < n; ++u) {
        s.eccentricity[u] = ecc[u];
        dia = std::max(dia, ecc[u]);
        rad = std::min(rad, ecc[u]);
    }
    s.diameter = dia;
    s.radius = rad;
    return s;
}

Graph power_graph(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
    const int n = g.vertex_count();
    const DistanceMatrix dm = distance_matrix(g);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto d = dm(u, v);
            if (d && *d >= 1 && *d <= k) edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) {
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_parts(
    const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) return std::nullopt;
    std::vector<int> side(n, -1);
    std::deque<int> queue{0};
    side[0] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (side[w] < 0) {
                side[w] = 1 - side[u];
                queue.push_back(w);
            } else if (side[w] == side[u]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    std::vector<int> left, right;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? left : right).push_back(v);
    if (left.empty() || right.empty()) return std::nullopt;
    const long long want = static_cast<long long>(left.size()) * right.size();
    if (g.edge_count() != want) return std::nullopt;
    return std::make_pair(left, right);
}

}  // namespace corona
