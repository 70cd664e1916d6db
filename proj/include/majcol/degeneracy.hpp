#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "majcol/graph.hpp"

namespace majcol {

struct DegeneracyResult {
  /// Proper colouring with colours 0..k, present iff g is k-degenerate.
  std::optional<std::vector<int>> colouring;
  /// Otherwise: vertex set of the (k+1)-core, every member has > k
  /// neighbours inside it.
  std::vector<Vertex> witness;
};

DegeneracyResult degeneracy_colour(const Graph& g, std::size_t k);

/// Smallest k for which g is k-degenerate.
std::size_t degeneracy(const Graph& g);

/// True iff every connected component has at most one cycle
/// (edges <= vertices per component).
bool components_at_most_unicyclic(const Graph& g);

}  // namespace majcol
