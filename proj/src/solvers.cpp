#include "corona/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "search_internal.hpp"

namespace corona {

using detail::Ticker;

Budget::Budget(std::optional<std::int64_t> nodes, std::optional<std::chrono::milliseconds> time)
    : max_nodes(nodes), max_time(time) {
    if (!max_nodes && !max_time)
        throw std::invalid_argument("budget needs at least one finite limit");
    if (max_nodes && *max_nodes < 1)
        throw std::invalid_argument("budget node limit must be positive");
}

// ---------------------------------------------------------------------------
// Certificate checking. Everything here works straight off the definitions
// and shares no code with the searches it validates.
// ---------------------------------------------------------------------------

namespace {

void check_vertex_refs(const Graph& g, const std::vector<int>& vertices) {
    for (int v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("certificate references vertex " + std::to_string(v) +
                                        " outside the graph");
}

bool check_k_coloring(const Graph& g, const KColoring& c) {
    if (c.k < 1) throw std::invalid_argument("coloring distance must be >= 1");
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring must assign every vertex exactly one color");
    for (int col : c.colors)
        if (col < 0) throw std::invalid_argument("coloring uses a negative color");
    const DistanceMatrix dm = distance_matrix(g);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            const auto d = dm(u, v);
            if (d && *d <= c.k && c.colors[u] == c.colors[v]) return false;
        }
    return true;
}

bool check_independent_set(const Graph& g, const IndependentSet& c) {
    check_vertex_refs(g, c.vertices);
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
            if (g.has_edge(c.vertices[i], c.vertices[j])) return false;
    return true;
}

bool check_vertex_cover(const Graph& g, const VertexCover& c) {
    check_vertex_refs(g, c.vertices);
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : c.vertices) in[v] = 1;
    for (const Edge& e : g.edges())
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

bool check_dominating_set(const Graph& g, const DominatingSet& c) {
    check_vertex_refs(g, c.vertices);
    std::vector<char> dominated(g.vertex_count(), 0);
    for (int v : c.vertices) {
        dominated[v] = 1;
        for (int w : g.neighbors(v)) dominated[w] = 1;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](char d) { return d != 0; });
}

bool check_matching(const Graph& g, const Matching& c) {
    std::vector<char> used(g.vertex_count(), 0);
    for (const Edge& e : c.edges) {
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("matching references non-edge (" + std::to_string(e.u) +
                                        ", " + std::to_string(e.v) + ")");
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = 1;
    }
    return true;
}

}  // namespace

bool check_certificate(const Graph& g, const Certificate& c) {
    return std::visit(
        [&](const auto& cert) -> bool {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, KColoring>) return check_k_coloring(g, cert);
            else if constexpr (std::is_same_v<T, IndependentSet>)
                return check_independent_set(g, cert);
            else if constexpr (std::is_same_v<T, VertexCover>) return check_vertex_cover(g, cert);
            else if constexpr (std::is_same_v<T, DominatingSet>)
                return check_dominating_set(g, cert);
            else
                return check_matching(g, cert);
        },
        c);
}

// ---------------------------------------------------------------------------
// Maximum independent set
// ---------------------------------------------------------------------------

namespace {

// alpha(active) <= number of cliques in any clique partition of the active
// subgraph; greedy partition, lowest-index growth.
int clique_cover_bound(const std::vector<Bits>& adj, Bits active) {
    int cliques = 0;
    while (true) {
        const int v = active.lowest();
        if (v < 0) break;
        ++cliques;
        active.reset(v);
        Bits cand = adj[v] & active;
        while (true) {
            const int u = cand.lowest();
            if (u < 0) break;
            active.reset(u);
            cand.reset(u);
            cand &= adj[u];
        }
    }
    return cliques;
}

struct MisSearch {
    const std::vector<Bits>& adj;
    Ticker& tick;
    int target;  // root clique-cover bound; reaching it proves optimality
    std::vector<int> cur;
    std::vector<int> best;

    void run(Bits active) {
        if (static_cast<int>(best.size()) == target) return;
        if (!tick.step()) return;
        const std::size_t mark = cur.size();

        // Degree-0 and degree-1 reductions are always safe picks.
        for (bool changed = true; changed;) {
            changed = false;
            for (int v = active.lowest(); v >= 0; v = active.next(v)) {
                const int d = adj[v].and_count(active);
                if (d == 0) {
                    cur.push_back(v);
                    active.reset(v);
                    changed = true;
                    break;
                }
                if (d == 1) {
                    cur.push_back(v);
                    active.reset(v);
                    active.reset((adj[v] & active).lowest());
                    changed = true;
                    break;
                }
            }
        }

        if (active.none()) {
            if (cur.size() > best.size()) best = cur;
            cur.resize(mark);
            return;
        }

        const int have = static_cast<int>(cur.size());
        const int cap = static_cast<int>(best.size());
        if (have + active.count() > cap && have + clique_cover_bound(adj, active) > cap) {
            int v = -1, vd = -1;
            for (int u = active.lowest(); u >= 0; u = active.next(u)) {
                const int d = adj[u].and_count(active);
                if (d > vd) {
                    vd = d;
                    v = u;
                }
            }
            Bits with_v = active;
            with_v.reset(v);
            with_v.and_not(adj[v]);
            cur.push_back(v);
            run(with_v);
            cur.pop_back();
            if (!tick.stopped) {
                active.reset(v);
                run(active);
            }
        }
        cur.resize(mark);
    }
};

std::vector<int> greedy_independent_set(const std::vector<Bits>& adj, int n) {
    Bits active(n);
    active.set_all();
    std::vector<int> picked;
    while (active.any()) {
        int v = -1, vd = n + 1;
        for (int u = active.lowest(); u >= 0; u = active.next(u)) {
            const int d = adj[u].and_count(active);
            if (d < vd) {
                vd = d;
                v = u;
            }
        }
        picked.push_back(v);
        active.reset(v);
        active.and_not(adj[v]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

ExactResult independence_number(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    const std::vector<Bits> adj = detail::adjacency_bits(g);
    Ticker tick(budget);

    std::vector<int> best = greedy_independent_set(adj, n);
    Bits all(n);
    all.set_all();
    const int root_ub = clique_cover_bound(adj, all);

    if (static_cast<int>(best.size()) < root_ub) {
        MisSearch search{adj, tick, root_ub, {}, best};
        search.run(all);
        best = search.best;
    }
    std::sort(best.begin(), best.end());

    ExactResult r;
    r.value = static_cast<int>(best.size());
    r.witness = IndependentSet{best};
    r.exact = !tick.stopped;
    r.lower = r.value;
    r.upper = r.exact ? r.value : root_ub;
    r.nodes_explored = tick.nodes;
    return r;
}

ExactResult vertex_cover_number(const Graph& g, const Budget& budget) {
    const ExactResult mis = independence_number(g, budget);
    const int n = g.vertex_count();

    std::vector<char> in_set(n, 0);
    for (int v : std::get<IndependentSet>(mis.witness).vertices) in_set[v] = 1;
    std::vector<int> cover;
    for (int v = 0; v < n; ++v)
        if (!in_set[v]) cover.push_back(v);

    ExactResult r;
    r.value = n - mis.value;
    r.witness = VertexCover{cover};
    r.exact = mis.exact;
    r.lower = n - mis.upper;
    r.upper = n - mis.lower;
    r.nodes_explored = mis.nodes_explored;
    return r;
}

// ---------------------------------------------------------------------------
// Minimum dominating set
// ---------------------------------------------------------------------------

namespace {

// Uncovered vertices with pairwise disjoint closed neighborhoods need
// pairwise distinct dominators.
int packing_bound(const std::vector<Bits>& closed, const Bits& uncovered, int n) {
    Bits blocked(n);
    int count = 0;
    for (int u = uncovered.lowest(); u >= 0; u = uncovered.next(u)) {
        if (!closed[u].intersects(blocked)) {
            ++count;
            blocked |= closed[u];
        }
    }
    return count;
}

struct DomSearch {
    const std::vector<Bits>& closed;
    int n;
    Ticker& tick;
    int target;  // root packing bound; reaching it proves optimality
    std::vector<int> cur;
    std::vector<int> best;

    void run(Bits uncovered, Bits allowed) {
        if (static_cast<int>(best.size()) == target) return;
        if (!tick.step()) return;
        if (uncovered.none()) {
            if (cur.size() < best.size()) best = cur;
            return;
        }
        if (static_cast<int>(cur.size()) + packing_bound(closed, uncovered, n) >=
            static_cast<int>(best.size()))
            return;

        // Most constrained uncovered vertex; some allowed dominator of it
        // must be in every dominating set extending this node.
        int u = -1, ud = n + 2;
        for (int w = uncovered.lowest(); w >= 0; w = uncovered.next(w)) {
            const int d = closed[w].and_count(allowed);
            if (d < ud) {
                ud = d;
                u = w;
            }
        }
        if (ud == 0) return;

        const Bits cands = closed[u] & allowed;
        for (int c = cands.lowest(); c >= 0 && !tick.stopped; c = cands.next(c)) {
            allowed.reset(c);  // later siblings exclude c
            Bits rest = uncovered;
            rest.and_not(closed[c]);
            cur.push_back(c);
            run(rest, allowed);
            cur.pop_back();
        }
    }
};

std::vector<int> greedy_dominating_set(const std::vector<Bits>& closed, int n) {
    Bits uncovered(n);
    uncovered.set_all();
    std::vector<int> picked;
    while (uncovered.any()) {
        int v = -1, gain = -1;
        for (int u = 0; u < n; ++u) {
            const int g = closed[u].and_count(uncovered);
            if (g > gain) {
                gain = g;
                v = u;
            }
        }
        picked.push_back(v);
        uncovered.and_not(closed[v]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace

ExactResult domination_number(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    const std::vector<Bits> closed = detail::closed_neighborhood_bits(g);
    Ticker tick(budget);

    std::vector<int> best = greedy_dominating_set(closed, n);
    Bits all(n);
    all.set_all();
    const int root_lb = packing_bound(closed, all, n);

    if (static_cast<int>(best.size()) > root_lb) {
        Bits allowed(n);
        allowed.set_all();
        DomSearch search{closed, n, tick, root_lb, {}, best};
        search.run(all, allowed);
        best = search.best;
    }
    std::sort(best.begin(), best.end());

    ExactResult r;
    r.value = static_cast<int>(best.size());
    r.witness = DominatingSet{best};
    r.exact = !tick.stopped;
    r.lower = r.exact ? r.value : root_lb;
    r.upper = r.value;
    r.nodes_explored = tick.nodes;
    return r;
}

// ---------------------------------------------------------------------------
// Maximum matching
// ---------------------------------------------------------------------------

namespace {

struct MatchSearch {
    const std::vector<Edge>& edges;
    int n;
    int m;
    Ticker& tick;
    int target;  // min(n/2, m)
    Bits matched;
    std::vector<Edge> cur;
    std::vector<Edge> best;

    void greedy_extend(int idx) {
        Bits used = matched;
        std::vector<Edge> ext = cur;
        for (int j = idx; j < m; ++j) {
            const Edge& e = edges[j];
            if (!used.test(e.u) && !used.test(e.v)) {
                ext.push_back(e);
                used.set(e.u);
                used.set(e.v);
            }
        }
        if (ext.size() > best.size()) best = std::move(ext);
    }

    void run(int idx) {
        if (static_cast<int>(best.size()) == target) return;
        if (!tick.step()) return;

        // Greedy completion of the current partial matching keeps the
        // incumbent fresh.
        greedy_extend(idx);

        if (idx == m) return;
        const int free_vertices = n - matched.count();
        if (static_cast<int>(cur.size()) + free_vertices / 2 <= static_cast<int>(best.size()))
            return;

        const Edge e = edges[idx];
        if (matched.test(e.u) || matched.test(e.v)) {
            run(idx + 1);
            return;
        }
        matched.set(e.u);
        matched.set(e.v);
        cur.push_back(e);
        run(idx + 1);
        cur.pop_back();
        matched.reset(e.u);
        matched.reset(e.v);
        if (!tick.stopped) run(idx + 1);
    }
};

}  // namespace

ExactResult matching_number(const Graph& g, const Budget& budget) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    Ticker tick(budget);
    const int root_ub = std::min(n / 2, m);

    MatchSearch search{g.edges(), n, m, tick, root_ub, Bits(n), {}, {}};
    search.greedy_extend(0);
    if (static_cast<int>(search.best.size()) < root_ub) search.run(0);

    std::vector<Edge> best = search.best;
    std::sort(best.begin(), best.end());

    ExactResult r;
    r.value = static_cast<int>(best.size());
    r.witness = Matching{best};
    r.exact = !tick.stopped;
    r.lower = r.value;
    r.upper = r.exact ? r.value : root_ub;
    r.nodes_explored = tick.nodes;
    return r;
}

}  // namespace corona
