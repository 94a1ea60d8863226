#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "corona/graph.hpp"

namespace corona {

/// Rejection of malformed edge-list text, carrying the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/// Edge-list text format:
///   - header line "n m" (two base-10 integers, single space)
///   - exactly m lines "u v"; pairs are normalized to u < v
///   - trailing newline required
///   - lines starting with '#' are comments and ignored
Graph parse_edge_list(std::string_view text);

std::string render_edge_list(const Graph& g);

}  // namespace corona
