#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "corona/graph.hpp"
#include "corona/rng.hpp"

namespace corona {

namespace family {

struct Complete {
    int n;
};
struct CompleteBipartite {
    int left;
    int right;
};
struct Path {
    int n;
};
struct Cycle {
    int n;
};
struct Star {
    int leaves;
};
struct Empty {
    int n;
};
struct RandomTree {
    int n;
    std::uint64_t seed;
};
struct GnpConnected {
    int n;
    double p;
    std::uint64_t seed;
};

}  // namespace family

using FamilySpec = std::variant<family::Complete, family::CompleteBipartite, family::Path,
                                family::Cycle, family::Star, family::Empty, family::RandomTree,
                                family::GnpConnected>;

/// Builds the requested standard graph. Deterministic; random families are
/// reproducible from their seed. Throws std::invalid_argument on bad
/// parameters (e.g. Cycle with n < 3), std::runtime_error when GnpConnected
/// fails to draw a connected graph within 1000 attempts.
///
/// Emission orders (these feed the corona factor assignment):
///   Complete:           (0,1), (0,2), ..., lexicographic
///   CompleteBipartite:  left vertex major, right vertex minor
///   Path/Cycle:         (i, i+1), cycle closes with (0, n-1) last
///   Star:               center 0, edges (0, i)
Graph standard_family(const FamilySpec& spec);

/// Textual grammar used by the CLI:
///   complete:N | bipartite:M:N | path:N | cycle:N | star:K | empty:N |
///   tree:N[:SEED] | gnp:N:P[:SEED]
/// When SEED is omitted, default_seed is used.
FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed = 0);

std::string to_string(const FamilySpec& spec);

/// G(n, p) draw from an already-positioned generator. Not necessarily
/// connected; building block for the random families and the fuzz samplers.
Graph gnp_graph(int n, double p, Rng& rng);

/// Uniform random labelled tree via random attachment.
Graph random_tree(int n, Rng& rng);

}  // namespace corona
