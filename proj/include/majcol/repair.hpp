#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "majcol/graph.hpp"
#include "majcol/types.hpp"

namespace majcol {

/// Why a vertex received the full list. A vertex may carry several.
enum DefectKind : std::uint8_t {
  kDefectNone = 0,
  kDefectColour = 1,
  kDefectPath = 2,
  kDefectCycle = 4,
  kDefectDuplicate = 8,
};

struct ListAssignment {
  /// Empty list <=> vertex not in U.
  std::vector<ColourList> lists;
  std::vector<std::uint32_t> pd;
  std::vector<std::uint8_t> defect_kind;
  std::size_t ell = 0;
  /// Actions taken, counting each step-1 vertex as one action.
  std::size_t actions = 0;

  bool listed(Vertex v) const { return !lists[v].empty(); }
  bool defective(Vertex v) const { return lists[v].size() == 3; }
  std::size_t u_size() const;
  std::vector<Vertex> listed_vertices() const;
  std::vector<Vertex> defective_vertices() const;
};

struct DefectKindCounts {
  std::size_t colour = 0, path = 0, cycle = 0, duplicate = 0;
};
DefectKindCounts count_defect_kinds(const ListAssignment& la);

/// Would recolouring u (an out-neighbour of v) to gamma make v lose its
/// majority status? Throws std::invalid_argument unless u in N+(v) and
/// gamma != c(u).
bool single_change_breaks(const Digraph& d, const Colouring3& c, Vertex u, Colour gamma, Vertex v);

/// Runs the deterministic list-assignment process to its fixpoint.
/// Tie-breaking: path first, then duplicate, then cycle, then propagation;
/// lowest vertex id first within each.
ListAssignment list_assignment_run(const Digraph& d, const Colouring3& c, std::size_t ell);

struct RepairCertificate {
  bool l1 = true, l3 = true, l4 = true, l5 = true;
  std::optional<Vertex> l1_witness;
  std::optional<Vertex> l3_witness;
  /// A cycle in D[U] with fewer than two defective vertices.
  std::vector<Vertex> l4_cycle;
  /// A size-2-only directed path with >= ell edges.
  std::vector<Vertex> l5_path;
  std::size_t u_size = 0;
  /// Longest size-2-only path, in edges (when l4 holds).
  std::size_t longest_size2_path = 0;

  bool all() const { return l1 && l3 && l4 && l5; }
};

RepairCertificate verify_certificate(const Digraph& d, const Colouring3& c,
                                     const ListAssignment& la);

/// Undirected graph on the defective vertices. members[i] is the digraph id
/// of vertex i.
struct DefectGraph {
  Graph graph;
  std::vector<Vertex> members;
};
DefectGraph defect_graph_build(const Digraph& d, const ListAssignment& la);

struct VerifyMajorityResult {
  bool ok = true;
  std::vector<Vertex> violators;
};
VerifyMajorityResult verify_majority(const Digraph& d, const Colouring3& c);

}  // namespace majcol
