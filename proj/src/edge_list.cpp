#include "corona/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

namespace corona {

namespace {

// Strictly "<digits> <digits>", no sign, no extra whitespace.
std::optional<std::pair<long long, long long>> parse_int_pair(std::string_view line) {
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) return std::nullopt;
    const std::string_view a = line.substr(0, space);
    const std::string_view b = line.substr(space + 1);
    auto number = [](std::string_view t) -> std::optional<long long> {
        if (t.empty() || t.size() > 9) return std::nullopt;
        long long value = 0;
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            value = value * 10 + (c - '0');
        }
        return value;
    };
    const auto x = number(a);
    const auto y = number(b);
    if (!x || !y) return std::nullopt;
    return std::make_pair(*x, *y);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    if (!text.empty() && text.back() != '\n')
        throw ParseError(static_cast<int>(1 + std::count(text.begin(), text.end(), '\n')),
                         "missing trailing newline");

    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    long long edges_seen = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;

        const auto pair = parse_int_pair(line);
        if (!pair) {
            throw ParseError(line_no, have_header ? "malformed edge line \"" + std::string(line) + "\""
                                                  : "malformed header \"" + std::string(line) + "\"");
        }
        if (!have_header) {
            n = pair->first;
            m = pair->second;
            have_header = true;
            continue;
        }
        if (edges_seen == m)
            throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edge lines");
        const long long u = pair->first, v = pair->second;
        if (u >= n || v >= n)
            throw ParseError(line_no, "endpoint out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw ParseError(line_no, "self-loop rejected");
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
        ++edges_seen;
    }

    if (!have_header) throw ParseError(1, "missing header");
    if (edges_seen < m)
        throw ParseError(line_no + 1, "end of input after " + std::to_string(edges_seen) +
                                          " of " + std::to_string(m) + " declared edges");
    return Graph(static_cast<int>(n), edges);
}

std::string render_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace corona
