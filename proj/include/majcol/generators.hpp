#pragma once

#include <cstddef>

#include "majcol/graph.hpp"
#include "majcol/random.hpp"

namespace majcol {

/// D(n, p): every ordered pair u != v is an arc independently with probability p.
Digraph gen_digraph(std::size_t n, double p, Seed seed);

/// G(n, p).
Graph gen_graph(std::size_t n, double p, Seed seed);

/// Poisson(lambda) Galton-Watson tree, arcs oriented away from the root.
/// Vertices at depth < max_depth get children; generation stops (and
/// `truncated` is set) once max_vertices would be exceeded.
RootedTreeDigraph gen_gw_tree(double lambda, std::size_t max_depth, std::size_t max_vertices,
                              Seed seed);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(std::size_t n);
/// Undirected cycle C_n.
Graph cycle_graph(std::size_t n);

}  // namespace majcol
