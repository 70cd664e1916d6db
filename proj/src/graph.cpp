#include "majcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace majcol {

namespace {

void build_csr(std::size_t n, const std::vector<Arc>& arcs, bool by_first,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) ++offsets[(by_first ? u : v) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(arcs.size());
  std::vector<std::size_t> pos(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : arcs) {
    if (by_first)
      targets[pos[u]++] = v;
    else
      targets[pos[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i)
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
}

bool sorted_strict(std::span<const Vertex> s) {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

}  // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n) {
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n)
      throw std::invalid_argument("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto it = std::adjacent_find(arcs.begin(), arcs.end()); it != arcs.end())
    throw std::invalid_argument("duplicate arc (" + std::to_string(it->first) + "," +
                                std::to_string(it->second) + ")");
  build_csr(n, arcs, true, out_offsets_, out_targets_);
  build_csr(n, arcs, false, in_offsets_, in_sources_);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> a;
  a.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out(u)) a.emplace_back(u, v);
  return a;
}

bool Digraph::valid() const {
  if (out_offsets_.size() != n_ + 1 || in_offsets_.size() != n_ + 1) return false;
  if (out_targets_.size() != in_sources_.size()) return false;
  for (Vertex v = 0; v < n_; ++v) {
    auto o = out(v);
    auto i = in(v);
    if (!sorted_strict(o) || !sorted_strict(i)) return false;
    for (Vertex w : o)
      if (w >= n_ || w == v) return false;
    for (Vertex w : i) {
      if (w >= n_ || w == v) return false;
      if (!has_arc(w, v)) return false;
    }
  }
  return true;
}

Graph::Graph(std::size_t n, std::vector<Arc> edges) : n_(n) {
  std::vector<Arc> both;
  both.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    both.emplace_back(u, v);
  }
  std::sort(both.begin(), both.end());
  if (auto it = std::adjacent_find(both.begin(), both.end()); it != both.end())
    throw std::invalid_argument("duplicate edge (" + std::to_string(it->first) + "," +
                                std::to_string(it->second) + ")");
  const std::size_t m = both.size();
  for (std::size_t i = 0; i < m; ++i) both.emplace_back(both[i].second, both[i].first);
  build_csr(n, both, true, offsets_, targets_);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto a = adj(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Arc> Graph::edges() const {
  std::vector<Arc> e;
  e.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj(u))
      if (u < v) e.emplace_back(u, v);
  return e;
}

bool Graph::valid() const {
  if (offsets_.size() != n_ + 1) return false;
  for (Vertex v = 0; v < n_; ++v) {
    auto a = adj(v);
    if (!sorted_strict(a)) return false;
    for (Vertex w : a)
      if (w >= n_ || w == v || !has_edge(w, v)) return false;
  }
  return true;
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Arc> e;
  e.reserve(d.arc_count());
  for (Vertex u = 0; u < d.n(); ++u)
    for (Vertex v : d.out(u))
      if (u < v || !d.has_arc(v, u)) e.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(d.n(), std::move(e));
}

namespace {
std::vector<Vertex> index_map(std::size_t n, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> idx(n, kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n || idx[keep[i]] != kAbsent)
      throw std::invalid_argument("induced subgraph: bad vertex set");
    idx[keep[i]] = static_cast<Vertex>(i);
  }
  return idx;
}
}  // namespace

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> keep) {
  const auto idx = index_map(d.n(), keep);
  std::vector<Arc> a;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : d.out(keep[i]))
      if (idx[w] != ~Vertex{0}) a.emplace_back(static_cast<Vertex>(i), idx[w]);
  return Digraph(keep.size(), std::move(a));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  const auto idx = index_map(g.n(), keep);
  std::vector<Arc> e;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.adj(keep[i]))
      if (idx[w] != ~Vertex{0} && static_cast<Vertex>(i) < idx[w])
        e.emplace_back(static_cast<Vertex>(i), idx[w]);
  return Graph(keep.size(), std::move(e));
}

bool RootedTreeDigraph::valid() const {
  const std::size_t n = tree.n();
  if (n == 0 || root >= n || depth.size() != n || !tree.valid()) return false;
  if (tree.in_degree(root) != 0 || depth[root] != 0) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root && tree.in_degree(v) != 1) return false;
    for (Vertex w : tree.out(v))
      if (depth[w] != depth[v] + 1) return false;
  }
  return true;
}

}  // namespace majcol
