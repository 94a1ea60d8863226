#include <algorithm>
#include <stdexcept>
#include <string>

#include "corona/solvers.hpp"
#include "search_internal.hpp"

namespace corona {

using detail::Ticker;

namespace {

// Multi-start greedy clique: grow from every vertex, extending by the
// candidate with the most candidate-neighbors. Deterministic tie-breaks.
std::vector<int> greedy_clique(const std::vector<Bits>& adj, int n) {
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
        std::vector<int> clique{s};
        Bits cand = adj[s];
        while (cand.any()) {
            int pick = -1, score = -1;
            for (int u = cand.lowest(); u >= 0; u = cand.next(u)) {
                const int c = adj[u].and_count(cand);
                if (c > score) {
                    score = c;
                    pick = u;
                }
            }
            clique.push_back(pick);
            cand.reset(pick);
            cand &= adj[pick];
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

struct DsaturState {
    int n;
    const std::vector<Bits>& adj;
    std::vector<int> color;                   // -1 while uncolored
    std::vector<std::vector<int>> seen_count; // seen_count[v][c]: colored neighbors of v using c
    std::vector<int> saturation;              // distinct neighbor colors of v
    std::vector<int> degree;

    explicit DsaturState(const std::vector<Bits>& a, int n_)
        : n(n_), adj(a), color(n_, -1),
          seen_count(n_, std::vector<int>(n_ + 1, 0)),
          saturation(n_, 0), degree(n_, 0) {
        for (int v = 0; v < n; ++v) degree[v] = adj[v].count();
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int u = adj[v].lowest(); u >= 0; u = adj[v].next(u))
            if (color[u] < 0 && seen_count[u][c]++ == 0) ++saturation[u];
    }

    void unassign(int v) {
        const int c = color[v];
        color[v] = -1;
        for (int u = adj[v].lowest(); u >= 0; u = adj[v].next(u))
            if (color[u] < 0 && --seen_count[u][c] == 0) --saturation[u];
    }

    // Uncolored vertex with maximum saturation; ties by degree then index.
    int select() const {
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (saturation[v] > sat || (saturation[v] == sat && degree[v] > deg)) {
                sat = saturation[v];
                deg = degree[v];
                pick = v;
            }
        }
        return pick;
    }
};

// Plain DSATUR greedy; the initial upper bound and incumbent.
std::pair<std::vector<int>, int> dsatur_greedy(const std::vector<Bits>& adj, int n) {
    DsaturState st(adj, n);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        const int v = st.select();
        int c = 0;
        while (st.seen_count[v][c] > 0) ++c;
        st.assign(v, c);
        used = std::max(used, c + 1);
    }
    return {st.color, used};
}

struct ColoringSearch {
    DsaturState st;
    Ticker& tick;
    int lower;
    int best;
    std::vector<int> best_coloring;

    void run(int colored, int used) {
        if (best == lower || !tick.step()) return;
        if (colored == st.n) {
            if (used < best) {
                best = used;
                best_coloring = st.color;
            }
            return;
        }
        const int v = st.select();
        // Admissible colors are 0..used (one fresh color) capped so the
        // final count stays below the incumbent; the bound re-reads `best`
        // every iteration since deeper calls may have improved it.
        for (int c = 0; c < std::min(used + 1, best - 1); ++c) {
            if (tick.stopped || best == lower) return;
            if (st.seen_count[v][c] > 0) continue;
            st.assign(v, c);
            run(colored + 1, std::max(used, c + 1));
            st.unassign(v);
        }
    }
};

ExactResult solve_coloring(const Graph& g, const Budget& budget,
                           std::span<const int> seed_clique, int witness_k) {
    const int n = g.vertex_count();
    const std::vector<Bits> adj = detail::adjacency_bits(g);
    Ticker tick(budget);

    for (int v : seed_clique)
        if (v < 0 || v >= n) throw std::invalid_argument("seed clique vertex out of range");
    for (std::size_t i = 0; i < seed_clique.size(); ++i)
        for (std::size_t j = i + 1; j < seed_clique.size(); ++j)
            if (!adj[seed_clique[i]].test(seed_clique[j]))
                throw std::invalid_argument("seed clique is not a clique");

    std::vector<int> clique = greedy_clique(adj, n);
    if (seed_clique.size() > clique.size()) clique.assign(seed_clique.begin(), seed_clique.end());
    const int lower = static_cast<int>(clique.size());

    auto [greedy_colors, greedy_used] = dsatur_greedy(adj, n);

    ExactResult r;
    r.nodes_explored = 0;
    if (greedy_used > lower) {
        ColoringSearch search{DsaturState(adj, n), tick, lower, greedy_used, greedy_colors};
        int used = 0;
        for (int v : clique) search.st.assign(v, used++);
        search.run(used, used);
        greedy_colors = search.best_coloring;
        greedy_used = search.best;
        r.nodes_explored = tick.nodes;
    }

    r.value = greedy_used;
    r.witness = KColoring{witness_k, greedy_colors};
    r.exact = !tick.stopped;
    r.lower = r.exact ? r.value : lower;
    r.upper = greedy_used;
    return r;
}

}  // namespace

ExactResult chromatic_number(const Graph& g, const Budget& budget,
                             std::span<const int> seed_clique) {
    return solve_coloring(g, budget, seed_clique, 1);
}

ExactResult k_distance_chromatic(const Graph& g, int k, const Budget& budget,
                                 std::span<const int> seed_clique) {
    const Graph power = power_graph(g, k);  // validates k >= 1
    return solve_coloring(power, budget, seed_clique, k);
}

}  // namespace corona
