#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "majcol/cycles.hpp"
#include "majcol/edge_list.hpp"
#include "majcol/generators.hpp"
#include "majcol/graph.hpp"

using namespace majcol;

namespace {

// Vertices on some simple directed cycle of length <= L, by plain DFS.
std::size_t brute_cycle_vertices(const Digraph& d, std::size_t L) {
  std::set<Vertex> on;
  std::vector<Vertex> path;
  std::vector<char> used(d.n(), 0);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex v) {
    for (Vertex w : d.out(v)) {
      if (w == start) {
        on.insert(path.begin(), path.end());
      } else if (!used[w] && path.size() < L) {
        used[w] = 1;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        used[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < d.n(); ++s) {
    path = {s};
    used.assign(d.n(), 0);
    used[s] = 1;
    dfs(s, s);
  }
  return on.size();
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("digraph construction and adjacency") {
  Digraph d(4, {{0, 1}, {2, 1}, {1, 3}, {0, 2}});
  CHECK(d.n() == 4);
  CHECK(d.arc_count() == 4);
  CHECK(d.out_degree(0) == 2);
  CHECK(d.in_degree(1) == 2);
  CHECK(d.has_arc(2, 1));
  CHECK_FALSE(d.has_arc(1, 2));
  CHECK(d.valid());
  const auto arcs = d.arcs();
  CHECK(std::is_sorted(arcs.begin(), arcs.end()));
  CHECK(std::vector<Vertex>(d.in(1).begin(), d.in(1).end()) == std::vector<Vertex>{0, 2});
}

TEST_CASE("digraph rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(Digraph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), std::invalid_argument);
  CHECK_NOTHROW(Digraph(3, {{0, 1}, {1, 0}}));
}

TEST_CASE("undirected graph and underlying graph") {
  Graph g(4, {{1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK(g.max_degree() == 2);
  CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));

  Digraph d(3, {{0, 1}, {1, 0}, {1, 2}});
  const Graph u = underlying_graph(d);
  CHECK(u.edge_count() == 2);
  CHECK(u.edges() == std::vector<Arc>{{0, 1}, {1, 2}});
}

TEST_CASE("induced subgraphs relabel by position") {
  Digraph d(5, {{0, 1}, {1, 4}, {4, 0}, {2, 3}});
  const std::vector<Vertex> keep{0, 1, 4};
  const Digraph s = induced_subdigraph(d, keep);
  CHECK(s.n() == 3);
  CHECK(s.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
  const Graph gs = induced_subgraph(underlying_graph(d), keep);
  CHECK(gs.edge_count() == 3);
}

TEST_CASE("edge list round trip and errors") {
  Digraph d(4, {{0, 1}, {3, 2}, {1, 3}});
  const std::string text = serialize_edge_list(d);
  CHECK(text == "digraph 4 3\n0 1\n1 3\n3 2\n");
  CHECK(parse_digraph(text) == d);
  Graph g(3, {{2, 0}});
  CHECK(serialize_edge_list(g) == "graph 3 1\n0 2\n");
  CHECK(std::holds_alternative<Graph>(parse_edge_list("graph 3 1\n0 2\n")));

  try {
    parse_digraph("digraph 3 2\n0 1\n1 7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_digraph("digraph 3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("graph 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("digraph 2 1\n0 0\n"), ParseError);
}

TEST_CASE("gen_digraph extremes and determinism") {
  CHECK(gen_digraph(4, 1.0, Seed{0}).arc_count() == 12);
  CHECK(gen_digraph(50, 0.0, Seed{0}).arc_count() == 0);
  CHECK(gen_graph(6, 1.0, Seed{3}).edge_count() == 15);
  CHECK(gen_digraph(500, 0.01, Seed{5}) == gen_digraph(500, 0.01, Seed{5}));
  CHECK_FALSE(gen_digraph(500, 0.01, Seed{5}) == gen_digraph(500, 0.01, Seed{6}));
  CHECK(gen_digraph(500, 0.01, Seed{5}).valid());
}

TEST_CASE("gen_digraph arc count matches n(n-1)p") {
  const std::size_t n = 2000;
  const double p = 0.003;
  double total = 0;
  const int reps = 20;
  for (int s = 0; s < reps; ++s) total += static_cast<double>(gen_digraph(n, p, Seed{std::uint64_t(s)}).arc_count());
  const double mean = static_cast<double>(n * (n - 1)) * p;
  const double sd = std::sqrt(mean * (1 - p) / reps);
  CHECK(std::fabs(total / reps - mean) < 5 * sd);
}

TEST_CASE("gen_digraph arcs are spread over ordered pairs") {
  // Each ordered pair appears with probability p; check the reverse-pair rate.
  const Digraph d = gen_digraph(3000, 0.002, Seed{17});
  std::size_t mutual = 0;
  for (const auto& [u, v] : d.arcs()) mutual += d.has_arc(v, u);
  const double expect = static_cast<double>(d.arc_count()) * 0.002;
  CHECK(std::fabs(static_cast<double>(mutual) - expect) < 5 * std::sqrt(expect) + 2);
}

TEST_CASE("gw tree shape") {
  const auto t = gen_gw_tree(2.0, 6, 100000, Seed{4});
  CHECK(t.valid());
  CHECK(t.root == 0);
  for (Vertex v = 0; v < t.tree.n(); ++v) {
    CHECK(t.depth[v] <= 6);
    if (v != t.root) CHECK(t.tree.in_degree(v) == 1);
    if (t.depth[v] == 6) CHECK(t.tree.out_degree(v) == 0);
  }
  const auto tiny = gen_gw_tree(5.0, 30, 50, Seed{1});
  CHECK(tiny.tree.n() <= 50);
}

TEST_CASE("gw offspring mean") {
  double kids = 0;
  const int reps = 4000;
  for (int s = 0; s < reps; ++s) kids += static_cast<double>(gen_gw_tree(3.0, 1, 1000, Seed{std::uint64_t(s)}).tree.out_degree(0));
  CHECK(std::fabs(kids / reps - 3.0) < 5 * std::sqrt(3.0 / reps));
}

TEST_CASE("short cycles against brute force") {
  CHECK(count_cycles_upto(directed_cycle(5), 5) == 5);
  CHECK(count_cycles_upto(directed_cycle(5), 4) == 0);
  CHECK_THROWS(count_cycles_upto(directed_cycle(5), kMaxShortCycleLength + 1));
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Digraph d = gen_digraph(25, 0.08, Seed{s});
    for (std::size_t L : {2u, 3u, 4u, 6u}) {
      CAPTURE(s);
      CAPTURE(L);
      CHECK(count_cycles_upto(d, L) == brute_cycle_vertices(d, L));
    }
  }
}

TEST_CASE("cycle builders") {
  const Digraph c = directed_cycle(4);
  CHECK(c.arc_count() == 4);
  CHECK(c.has_arc(3, 0));
  const Graph g = cycle_graph(5);
  CHECK(g.edge_count() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
}

}
