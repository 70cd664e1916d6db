#include "majcol/list_colouring.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "majcol/recolour.hpp"

namespace majcol {

namespace {
std::string describe(ColourList list, const std::vector<Vertex>& cycle) {
  std::string s = "list class {";
  bool first = true;
  for (Colour c : list.colours()) {
    if (!first) s += ",";
    s += std::to_string(to_int(c));
    first = false;
  }
  s += "} contains a directed cycle:";
  for (Vertex v : cycle) s += " " + std::to_string(v);
  return s;
}
}  // namespace

CyclicListClass::CyclicListClass(ColourList list, std::vector<Vertex> cycle)
    : std::runtime_error(describe(list, cycle)), list_(list), cycle_(std::move(cycle)) {}

Colouring3 acyclic_list_complete(const Digraph& d, const PartialColouring& outside,
                                 const std::vector<ColourList>& lists) {
  const std::size_t n = d.n();
  if (outside.size() != n || lists.size() != n)
    throw std::invalid_argument("acyclic_list_complete: size mismatch");
  for (Vertex v = 0; v < n; ++v) {
    if (lists[v].empty() && !outside[v])
      throw std::invalid_argument("vertex " + std::to_string(v) + " has neither list nor colour");
    if (!lists[v].empty() && lists[v].size() != 2)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has a list of size != 2");
  }

  Colouring3 c(n, Colour::One);
  std::vector<char> done(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (lists[v].empty()) {
      c[v] = *outside[v];
      done[v] = 1;
    }

  // Within a class, colour a vertex once all its same-class out-neighbours
  // are coloured (sinks first).
  std::vector<std::uint32_t> pending_out(n, 0);
  std::deque<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (lists[v].empty()) continue;
    for (Vertex w : d.out(v))
      if (lists[w] == lists[v]) ++pending_out[v];
    if (pending_out[v] == 0) ready.push_back(v);
  }
  std::size_t coloured = 0, to_colour = 0;
  for (Vertex v = 0; v < n; ++v) to_colour += !lists[v].empty();

  while (!ready.empty()) {
    const Vertex v = ready.front();
    ready.pop_front();
    const ColourList L = lists[v];
    ColourCounts pess{};
    for (Vertex w : d.out(v)) {
      if (lists[w].empty() || lists[w] == L)
        ++pess[index_of(c[w])];
      else
        ++pess[index_of(L.intersect(lists[w]).colours().front())];
    }
    const std::size_t deg = d.out_degree(v);
    std::optional<Colour> pick;
    for (Colour x : L.colours())
      if (!more_than_half(pess[index_of(x)], deg)) {
        pick = x;
        break;
      }
    c[v] = *pick;  // two candidates, at most one over half
    done[v] = 1;
    ++coloured;
    for (Vertex u : d.in(v))
      if (lists[u] == L && --pending_out[u] == 0) ready.push_back(u);
  }

  if (coloured < to_colour) {
    Vertex start = 0;
    while (done[start] || lists[start].empty()) ++start;
    const ColourList L = lists[start];
    std::vector<std::size_t> pos(n, SIZE_MAX);
    std::vector<Vertex> walk;
    Vertex cur = start;
    while (pos[cur] == SIZE_MAX) {
      pos[cur] = walk.size();
      walk.push_back(cur);
      for (Vertex w : d.out(cur))
        if (lists[w] == L && !done[w]) {
          cur = w;
          break;
        }
    }
    throw CyclicListClass(L, {walk.begin() + static_cast<std::ptrdiff_t>(pos[cur]), walk.end()});
  }
  return c;
}

}  // namespace majcol
