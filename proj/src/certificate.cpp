#include <algorithm>
#include <deque>

#include "majcol/recolour.hpp"
#include "majcol/repair.hpp"

namespace majcol {

namespace {

bool size2(const ListAssignment& la, Vertex v) { return la.lists[v].size() == 2; }

// Kahn on the size-2 subgraph. Returns vertices in an order where every arc
// goes forward; leftover (cyclic) vertices are reported through `cyclic`.
std::vector<Vertex> size2_topo(const Digraph& d, const ListAssignment& la,
                               std::vector<Vertex>& cyclic) {
  const std::size_t n = d.n();
  std::vector<std::uint32_t> indeg(n, 0);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (!size2(la, v)) continue;
    members.push_back(v);
    for (Vertex w : d.in(v))
      if (size2(la, w)) ++indeg[v];
  }
  std::vector<Vertex> order;
  std::deque<Vertex> q;
  for (Vertex v : members)
    if (indeg[v] == 0) q.push_back(v);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop_front();
    order.push_back(v);
    for (Vertex w : d.out(v))
      if (size2(la, w) && --indeg[w] == 0) q.push_back(w);
  }
  cyclic.clear();
  if (order.size() == members.size()) return order;
  // Every leftover vertex has a leftover in-neighbour; walk backwards.
  std::vector<char> left(n, 0);
  for (Vertex v : members)
    if (indeg[v] > 0) left[v] = 1;
  Vertex cur = *std::find_if(members.begin(), members.end(), [&](Vertex v) { return left[v]; });
  std::vector<std::size_t> pos(n, SIZE_MAX);
  std::vector<Vertex> walk;
  while (pos[cur] == SIZE_MAX) {
    pos[cur] = walk.size();
    walk.push_back(cur);
    for (Vertex w : d.in(cur))
      if (size2(la, w) && left[w]) {
        cur = w;
        break;
      }
  }
  cyclic.assign(walk.begin() + static_cast<std::ptrdiff_t>(pos[cur]), walk.end());
  std::reverse(cyclic.begin(), cyclic.end());
  return order;
}

}  // namespace

RepairCertificate verify_certificate(const Digraph& d, const Colouring3& c,
                                     const ListAssignment& la) {
  RepairCertificate cert;
  const std::size_t n = d.n();
  cert.u_size = la.u_size();

  // L1: outside U, majority now and under any single listed change.
  for (Vertex v = 0; v < n && cert.l1; ++v) {
    if (la.listed(v)) continue;
    const auto counts = out_colour_counts(d, c, v);
    const std::size_t deg = d.out_degree(v);
    bool bad = more_than_half(counts[index_of(c[v])], deg);
    std::size_t in_u = 0;
    for (Vertex u : d.out(v)) {
      if (!la.listed(u)) continue;
      if (++in_u > 1) bad = true;
      for (Colour g : la.lists[u].without(c[u]).colours())
        if (c[v] == g && counts[index_of(g)] == deg / 2) bad = true;
    }
    if (bad) {
      cert.l1 = false;
      cert.l1_witness = v;
    }
  }

  // L3
  for (Vertex v = 0; v < n && cert.l3; ++v) {
    if (!la.listed(v)) continue;
    const int s = la.lists[v].size();
    bool ok = (s == 2 || s == 3);
    if (s == 2) ok = ok && la.lists[v] == ColourList::of(c[v], next_colour(c[v])) &&
                     la.defect_kind[v] == kDefectNone;
    if (s == 3) ok = ok && la.defect_kind[v] != kDefectNone && la.pd[v] == 0;
    if (!ok) {
      cert.l3 = false;
      cert.l3_witness = v;
    }
  }

  // L4 part 1: size-2 subgraph acyclic.
  std::vector<Vertex> cyclic;
  const auto order = size2_topo(d, la, cyclic);
  if (!cyclic.empty()) {
    cert.l4 = false;
    cert.l4_cycle = cyclic;
  }

  // L4 part 2: no defective w returns to itself through size-2 vertices only.
  if (cert.l4) {
    std::vector<std::size_t> stamp(n, 0);
    std::vector<Vertex> parent(n);
    for (Vertex w = 0; w < n && cert.l4; ++w) {
      if (!la.defective(w)) continue;
      std::deque<Vertex> q;
      for (Vertex x : d.out(w))
        if (size2(la, x) && stamp[x] != w + 1) {
          stamp[x] = w + 1;
          parent[x] = w;
          q.push_back(x);
        }
      while (!q.empty() && cert.l4) {
        const Vertex x = q.front();
        q.pop_front();
        for (Vertex y : d.out(x)) {
          if (y == w) {
            std::vector<Vertex> cyc;
            for (Vertex z = x; z != w; z = parent[z]) cyc.push_back(z);
            cyc.push_back(w);
            std::reverse(cyc.begin(), cyc.end());
            cert.l4 = false;
            cert.l4_cycle = cyc;
            break;
          }
          if (size2(la, y) && stamp[y] != w + 1) {
            stamp[y] = w + 1;
            parent[y] = x;
            q.push_back(y);
          }
        }
      }
    }
  }

  // L5: longest size-2 path (edges) < ell.
  if (!cyclic.empty()) {
    cert.l5 = false;
  } else {
    std::vector<std::size_t> best(n, 0);
    std::vector<Vertex> from(n);
    std::size_t longest = 0;
    Vertex end = 0;
    for (Vertex v : order) {
      for (Vertex w : d.in(v))
        if (size2(la, w) && best[w] + 1 > best[v]) {
          best[v] = best[w] + 1;
          from[v] = w;
        }
      if (best[v] > longest) {
        longest = best[v];
        end = v;
      }
    }
    cert.longest_size2_path = longest;
    if (longest >= la.ell) {
      cert.l5 = false;
      std::vector<Vertex> path{end};
      for (Vertex v = end; best[v] > 0;) path.push_back(v = from[v]);
      std::reverse(path.begin(), path.end());
      cert.l5_path = path;
    }
  }
  return cert;
}

DefectGraph defect_graph_build(const Digraph& d, const ListAssignment& la) {
  const std::size_t n = d.n();
  DefectGraph out;
  out.members = la.defective_vertices();
  std::vector<Vertex> index(n, 0);
  for (std::size_t i = 0; i < out.members.size(); ++i)
    index[out.members[i]] = static_cast<Vertex>(i);

  std::vector<Arc> edges;
  std::vector<std::size_t> stamp(n, 0);
  std::vector<Vertex> frontier, next;
  const std::size_t max_len = la.ell + 1;
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    const Vertex w = out.members[i];
    frontier.assign(1, w);
    stamp[w] = i + 1;
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
      next.clear();
      for (Vertex x : frontier)
        for (Vertex y : d.out(x)) {
          if (la.defective(y)) {
            if (y != w) {
              const Vertex a = static_cast<Vertex>(i), b = index[y];
              edges.emplace_back(std::min(a, b), std::max(a, b));
            }
          } else if (size2(la, y) && stamp[y] != i + 1) {
            stamp[y] = i + 1;
            next.push_back(y);
          }
        }
      frontier.swap(next);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph(out.members.size(), std::move(edges));
  return out;
}

VerifyMajorityResult verify_majority(const Digraph& d, const Colouring3& c) {
  VerifyMajorityResult r;
  for (Vertex v = 0; v < d.n(); ++v)
    if (!vertex_majority_status(d, c, v).is_majority) r.violators.push_back(v);
  r.ok = r.violators.empty();
  return r;
}

}  // namespace majcol
