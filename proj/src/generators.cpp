#include "majcol/generators.hpp"

#include <stdexcept>

namespace majcol {

namespace {

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
}

// Calls emit(k) for each selected index k in [0, total), each kept
// independently with probability p.
template <class F>
void bernoulli_indices(std::uint64_t total, double p, Rng& rng, F&& emit) {
  if (p <= 0.0 || total == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t k = 0; k < total; ++k) emit(k);
    return;
  }
  std::uint64_t k = 0;
  for (;;) {
    const std::uint64_t skip = rng.geometric_skip(p);
    if (skip >= total - k) return;
    k += skip;
    emit(k);
    if (++k >= total) return;
  }
}

}  // namespace

Digraph gen_digraph(std::size_t n, double p, Seed seed) {
  check_p(p);
  if (n < 2) return Digraph(n, {});
  Rng rng(derive_seed(seed, 0x6469677261ULL));
  const std::uint64_t row = n - 1;
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(static_cast<double>(n) * static_cast<double>(row) * p * 1.1) + 16);
  bernoulli_indices(static_cast<std::uint64_t>(n) * row, p, rng, [&](std::uint64_t k) {
    const auto u = static_cast<Vertex>(k / row);
    auto v = static_cast<Vertex>(k % row);
    if (v >= u) ++v;
    arcs.emplace_back(u, v);
  });
  return Digraph(n, std::move(arcs));
}

Graph gen_graph(std::size_t n, double p, Seed seed) {
  check_p(p);
  if (n < 2) return Graph(n, {});
  Rng rng(derive_seed(seed, 0x6772617068ULL));
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<Arc> edges;
  // Row u holds pairs (u, u+1..n-1); indices arrive increasing, so walk rows.
  std::uint64_t row_start = 0;
  Vertex u = 0;
  bernoulli_indices(total, p, rng, [&](std::uint64_t k) {
    while (k >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.emplace_back(u, static_cast<Vertex>(u + 1 + (k - row_start)));
  });
  return Graph(n, std::move(edges));
}

RootedTreeDigraph gen_gw_tree(double lambda, std::size_t max_depth, std::size_t max_vertices,
                              Seed seed) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  if (max_vertices < 1) throw std::invalid_argument("max_vertices must be >= 1");
  Rng rng(derive_seed(seed, 0x6777ULL));
  RootedTreeDigraph out;
  std::vector<std::size_t> depth{0};
  std::vector<Arc> arcs;
  // Breadth-first: vertex ids are assigned in generation order.
  for (std::size_t head = 0; head < depth.size(); ++head) {
    if (depth[head] >= max_depth) continue;
    const std::uint64_t kids = rng.poisson(lambda);
    for (std::uint64_t j = 0; j < kids; ++j) {
      if (depth.size() >= max_vertices) {
        out.truncated = true;
        break;
      }
      const auto child = static_cast<Vertex>(depth.size());
      depth.push_back(depth[head] + 1);
      arcs.emplace_back(static_cast<Vertex>(head), child);
    }
    if (out.truncated) break;
  }
  out.tree = Digraph(depth.size(), std::move(arcs));
  out.depth = std::move(depth);
  out.root = 0;
  return out;
}

Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> a;
  if (n >= 2)
    for (std::size_t i = 0; i < n; ++i)
      a.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Digraph(n, std::move(a));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  std::vector<Arc> e;
  for (std::size_t i = 0; i < n; ++i)
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(e));
}

}  // namespace majcol
