#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "majcol/graph.hpp"
#include "majcol/types.hpp"

namespace majcol {

using PartialColouring = std::vector<std::optional<Colour>>;

/// Raised when the vertices sharing some list induce a directed cycle.
class CyclicListClass : public std::runtime_error {
 public:
  CyclicListClass(ColourList list, std::vector<Vertex> cycle);
  ColourList list() const { return list_; }
  const std::vector<Vertex>& cycle() const { return cycle_; }

 private:
  ColourList list_;
  std::vector<Vertex> cycle_;
};

/// Colours every vertex with a (size-2) list so that each of them is
/// majority-coloured, given fixed colours outside. Vertices with an empty
/// list must be coloured in `outside`. Throws CyclicListClass if some list
/// class is not acyclic, std::invalid_argument on malformed input.
Colouring3 acyclic_list_complete(const Digraph& d, const PartialColouring& outside,
                                 const std::vector<ColourList>& lists);

}  // namespace majcol
