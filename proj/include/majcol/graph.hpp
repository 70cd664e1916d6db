#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "majcol/types.hpp"

namespace majcol {

using Arc = std::pair<Vertex, Vertex>;

/// Static directed graph, CSR layout for both directions. Neighbour lists are
/// sorted; no loops, no parallel arcs.
class Digraph {
 public:
  Digraph() = default;
  /// Builds from an arc list. Throws std::invalid_argument on loops, duplicates
  /// or out-of-range ids.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t n() const { return n_; }
  std::size_t arc_count() const { return out_targets_.size(); }

  std::span<const Vertex> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  bool has_arc(Vertex u, Vertex v) const;
  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  /// Checks the in/out consistency and sortedness invariants from scratch.
  bool valid() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// Static simple undirected graph, CSR, sorted neighbour lists.
class Graph {
 public:
  Graph() = default;
  /// Each unordered edge given once, in either orientation.
  Graph(std::size_t n, std::vector<Arc> edges);

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const Vertex> adj(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  /// Edges (u, v) with u < v, lexicographic.
  std::vector<Arc> edges() const;
  bool valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Underlying simple graph of a digraph (antiparallel pairs merge).
Graph underlying_graph(const Digraph& d);

/// Induced sub-digraph on `keep` (sorted, distinct). Vertex i of the result is
/// keep[i].
Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> keep);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

struct RootedTreeDigraph {
  Digraph tree;
  Vertex root = 0;
  std::vector<std::size_t> depth;
  bool truncated = false;

  bool valid() const;
};

}  // namespace majcol
