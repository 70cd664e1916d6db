#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "majcol/graph.hpp"

namespace majcol {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using AnyGraph = std::variant<Digraph, Graph>;

/// Text format: "digraph n m" or "graph n m", then m lines "u v". Lines that
/// start with '#' and blank lines are skipped.
AnyGraph parse_edge_list(std::string_view text);
Digraph parse_digraph(std::string_view text);
Graph parse_graph(std::string_view text);

/// Canonical form: header, arcs in lexicographic order, '\n' endings.
std::string serialize_edge_list(const Digraph& d);
std::string serialize_edge_list(const Graph& g);

}  // namespace majcol
