#include "corona/families.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace corona {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

int parse_int(std::string_view t) {
    int value = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    require(res.ec == std::errc{} && res.ptr == t.data() + t.size(),
            "bad integer \"" + std::string(t) + "\" in family spec");
    return value;
}

std::uint64_t parse_seed(std::string_view t) {
    std::uint64_t value = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    require(res.ec == std::errc{} && res.ptr == t.data() + t.size(),
            "bad seed \"" + std::string(t) + "\" in family spec");
    return value;
}

double parse_prob(std::string_view t) {
    double value = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    require(res.ec == std::errc{} && res.ptr == t.data() + t.size() && value >= 0.0 && value <= 1.0,
            "bad probability \"" + std::string(t) + "\" in family spec");
    return value;
}

}  // namespace

Graph gnp_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph random_tree(int n, Rng& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(make_edge(rng.below(v), v));
    return Graph(n, edges);
}

Graph standard_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            std::vector<Edge> edges;
            if constexpr (std::is_same_v<T, family::Complete>) {
                require(s.n >= 1, "complete graph needs n >= 1");
                for (int u = 0; u < s.n; ++u)
                    for (int v = u + 1; v < s.n; ++v) edges.push_back({u, v});
                return Graph(s.n, edges);
            } else if constexpr (std::is_same_v<T, family::CompleteBipartite>) {
                require(s.left >= 1 && s.right >= 1, "complete bipartite graph needs both sides >= 1");
                for (int u = 0; u < s.left; ++u)
                    for (int v = 0; v < s.right; ++v) edges.push_back({u, s.left + v});
                return Graph(s.left + s.right, edges);
            } else if constexpr (std::is_same_v<T, family::Path>) {
                require(s.n >= 1, "path needs n >= 1");
                for (int v = 0; v + 1 < s.n; ++v) edges.push_back({v, v + 1});
                return Graph(s.n, edges);
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                require(s.n >= 3, "cycle needs n >= 3");
                for (int v = 0; v + 1 < s.n; ++v) edges.push_back({v, v + 1});
                edges.push_back({0, s.n - 1});
                return Graph(s.n, edges);
            } else if constexpr (std::is_same_v<T, family::Star>) {
                require(s.leaves >= 1, "star needs at least one leaf");
                for (int v = 1; v <= s.leaves; ++v) edges.push_back({0, v});
                return Graph(s.leaves + 1, edges);
            } else if constexpr (std::is_same_v<T, family::Empty>) {
                require(s.n >= 0, "empty graph needs n >= 0");
                return Graph(s.n, {});
            } else if constexpr (std::is_same_v<T, family::RandomTree>) {
                require(s.n >= 1, "random tree needs n >= 1");
                Rng rng(s.seed);
                return random_tree(s.n, rng);
            } else {
                static_assert(std::is_same_v<T, family::GnpConnected>);
                require(s.n >= 1, "gnp graph needs n >= 1");
                require(s.p >= 0.0 && s.p <= 1.0, "gnp probability must be in [0, 1]");
                Rng rng(s.seed);
                for (int attempt = 0; attempt < 1000; ++attempt) {
                    Graph g = gnp_graph(s.n, s.p, rng);
                    if (is_connected(g)) return g;
                }
                throw std::runtime_error("gnp: no connected draw within 1000 attempts");
            }
        },
        spec);
}

FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed) {
    const auto parts = split(text, ':');
    const std::string_view name = parts[0];
    const std::size_t args = parts.size() - 1;
    auto arg = [&](std::size_t i) { return parts[i + 1]; };

    if (name == "complete") {
        require(args == 1, "usage: complete:N");
        return family::Complete{parse_int(arg(0))};
    }
    if (name == "bipartite") {
        require(args == 2, "usage: bipartite:M:N");
        return family::CompleteBipartite{parse_int(arg(0)), parse_int(arg(1))};
    }
    if (name == "path") {
        require(args == 1, "usage: path:N");
        return family::Path{parse_int(arg(0))};
    }
    if (name == "cycle") {
        require(args == 1, "usage: cycle:N");
        return family::Cycle{parse_int(arg(0))};
    }
    if (name == "star") {
        require(args == 1, "usage: star:K");
        return family::Star{parse_int(arg(0))};
    }
    if (name == "empty") {
        require(args == 1, "usage: empty:N");
        return family::Empty{parse_int(arg(0))};
    }
    if (name == "tree") {
        require(args == 1 || args == 2, "usage: tree:N[:SEED]");
        return family::RandomTree{parse_int(arg(0)), args == 2 ? parse_seed(arg(1)) : default_seed};
    }
    if (name == "gnp") {
        require(args == 2 || args == 3, "usage: gnp:N:P[:SEED]");
        return family::GnpConnected{parse_int(arg(0)), parse_prob(arg(1)),
                                    args == 3 ? parse_seed(arg(2)) : default_seed};
    }
    throw std::invalid_argument("unknown family \"" + std::string(name) + "\"");
}

std::string to_string(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, family::Complete>)
                return "complete:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, family::CompleteBipartite>)
                return "bipartite:" + std::to_string(s.left) + ":" + std::to_string(s.right);
            else if constexpr (std::is_same_v<T, family::Path>)
                return "path:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, family::Cycle>)
                return "cycle:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, family::Star>)
                return "star:" + std::to_string(s.leaves);
            else if constexpr (std::is_same_v<T, family::Empty>)
                return "empty:" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, family::RandomTree>)
                return "tree:" + std::to_string(s.n) + ":" + std::to_string(s.seed);
            else
                return "gnp:" + std::to_string(s.n) + ":" + std::to_string(s.p) + ":" +
                       std::to_string(s.seed);
        },
        spec);
}

}  // namespace corona
