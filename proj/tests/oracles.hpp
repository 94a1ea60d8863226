#pragma once

#include <vector>

#include "corona/graph.hpp"

// Brute-force enumeration oracles, deliberately independent of the solver
// implementations: distances come from Floyd-Warshall rather than BFS, and
// the searches are plain enumerations without bounds or orderings. Only
// usable at tiny sizes.
namespace oracle {

int chromatic(const corona::Graph& g);
int k_distance_chromatic(const corona::Graph& g, int k);
int independence(const corona::Graph& g);
int vertex_cover(const corona::Graph& g);
int domination(const corona::Graph& g);
int matching(const corona::Graph& g);

/// Whether g admits a proper k-distance coloring with `colors` colors.
bool k_colorable(const corona::Graph& g, int k, int colors);

/// Relabels vertices by perm (perm[v] is the new name of v).
corona::Graph permute(const corona::Graph& g, const std::vector<int>& perm);

}  // namespace oracle
