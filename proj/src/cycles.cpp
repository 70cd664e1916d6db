#include "majcol/cycles.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace majcol {

std::size_t count_cycles_upto(const Digraph& d, std::size_t L) {
  if (L > kMaxShortCycleLength)
    throw std::invalid_argument("count_cycles_upto: L=" + std::to_string(L) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxShortCycleLength) +
                                " (neighbourhood growth makes larger L impractical)");
  if (L < 2) return 0;
  const std::size_t n = d.n();
  // v is on a cycle of length <= L iff some in-neighbour of v is reachable
  // from v within L-1 steps.
  std::vector<std::size_t> stamp(n, 0);
  std::vector<Vertex> frontier, next;
  std::size_t count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (d.in_degree(v) == 0 || d.out_degree(v) == 0) continue;
    const std::size_t mark = v + 1;
    frontier.assign(1, v);
    stamp[v] = mark;
    bool found = false;
    for (std::size_t depth = 0; depth < L - 1 && !found && !frontier.empty(); ++depth) {
      next.clear();
      for (Vertex x : frontier)
        for (Vertex y : d.out(x)) {
          if (stamp[y] == mark) continue;
          stamp[y] = mark;
          next.push_back(y);
        }
      frontier.swap(next);
      for (Vertex u : d.in(v))
        if (stamp[u] == mark) {
          found = true;
          break;
        }
    }
    if (found) ++count;
  }
  return count;
}

}  // namespace majcol
