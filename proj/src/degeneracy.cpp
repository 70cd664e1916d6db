#include "majcol/degeneracy.hpp"

#include <algorithm>
#include <numeric>

namespace majcol {

DegeneracyResult degeneracy_colour(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order, stack;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= k) stack.push_back(v);
  }
  std::reverse(stack.begin(), stack.end());
  // Peel vertices of current degree <= k; lowest id first among the initial ones.
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : g.adj(v))
      if (!removed[w] && deg[w]-- == k + 1) stack.push_back(w);
  }

  DegeneracyResult res;
  if (order.size() < n) {
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v]) res.witness.push_back(v);
    return res;
  }
  // Reverse peel order: each vertex sees at most k coloured neighbours.
  std::vector<int> colour(n, -1);
  std::vector<char> used(k + 2, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::fill(used.begin(), used.end(), 0);
    for (Vertex w : g.adj(v))
      if (colour[w] >= 0 && static_cast<std::size_t>(colour[w]) <= k) used[colour[w]] = 1;
    int c = 0;
    while (used[c]) ++c;
    colour[v] = c;
  }
  res.colouring = std::move(colour);
  return res;
}

std::size_t degeneracy(const Graph& g) {
  std::size_t k = 0;
  while (!degeneracy_colour(g, k).colouring) ++k;
  return k;
}

bool components_at_most_unicyclic(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    const Vertex a = find(u), b = find(v);
    if (a != b) parent[a] = b;
  }
  std::vector<std::size_t> verts(n, 0), edges(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++verts[find(v)];
    edges[find(v)] += g.degree(v);
  }
  for (Vertex r = 0; r < n; ++r)
    if (edges[r] / 2 > verts[r]) return false;
  return true;
}

}  // namespace majcol
