#include "majcol/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "majcol/degeneracy.hpp"
#include "majcol/list_colouring.hpp"
#include "majcol/recolour.hpp"

namespace majcol {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Sparse: return "sparse";
    case Strategy::Main: return "main";
    case Strategy::CrudeDense: return "crude-dense";
  }
  return "?";
}

const char* to_string(PipelineStatus s) {
  return s == PipelineStatus::Certified ? "Certified" : "BestEffort";
}

std::size_t default_t0(std::size_t n) {
  if (n < 16) return 10;
  const double ll = std::log(std::log(static_cast<double>(n)));
  const auto t = static_cast<std::size_t>(std::ceil(ll * ll));
  return std::clamp<std::size_t>(t, 10, 200);
}

Strategy choose_strategy(const Digraph& d) {
  if (components_at_most_unicyclic(underlying_graph(d))) return Strategy::Sparse;
  const double n = static_cast<double>(d.n());
  const double np = n > 1 ? static_cast<double>(d.arc_count()) / (n - 1) : 0.0;
  if (np >= 20.0 * std::log(n)) return Strategy::CrudeDense;
  return Strategy::Main;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Attempt {
  Colouring3 colouring;
  bool certified = false;
};

class Runner {
 public:
  Runner(const Digraph& d, const PipelineParams& params, PipelineReport& report)
      : d_(d), params_(params), rep_(report) {}

  Attempt sparse(std::size_t attempt) {
    Attempt a;
    a.colouring.assign(d_.n(), Colour::One);
    auto t = Clock::now();
    auto res = degeneracy_colour(underlying_graph(d_), 2);
    if (!res.colouring) {
      stage(attempt, "proper_colouring", false, "underlying graph is not 2-degenerate", t);
      return a;
    }
    for (Vertex v = 0; v < d_.n(); ++v) a.colouring[v] = colour_at((*res.colouring)[v]);
    stage(attempt, "proper_colouring", true, "", t);
    return finish(attempt, std::move(a));
  }

  Attempt main(std::size_t attempt, Seed seed) {
    Attempt a;
    auto t = Clock::now();
    auto rec = run_recolouring(d_, RecolourMode::PersonalityChanging, rep_.t0, seed);
    Colouring3 c = std::move(rec.final_colours);
    rep_.recolour_nonmajority = rec.trace.records.back().nonmajority;
    stage(attempt, "recolour", true,
          "nonmajority=" + std::to_string(rep_.recolour_nonmajority), t);
    a.colouring = c;

    t = Clock::now();
    auto la = list_assignment_run(d_, c, params_.ell);
    rep_.u_size = la.u_size();
    rep_.actions = la.actions;
    rep_.defect_kinds = count_defect_kinds(la);
    stage(attempt, "list_assignment", true, "u_size=" + std::to_string(rep_.u_size), t);

    t = Clock::now();
    auto cert = verify_certificate(d_, c, la);
    rep_.certificate = cert;
    if (!cert.all()) {
      stage(attempt, "certificate", false, cert_detail(cert), t);
      return a;
    }
    stage(attempt, "certificate", true, "", t);

    t = Clock::now();
    auto dg = defect_graph_build(d_, la);
    rep_.defect_graph_vertices = dg.graph.n();
    rep_.defect_graph_edges = dg.graph.edge_count();
    auto dcol = degeneracy_colour(dg.graph, 2);
    if (!dcol.colouring) {
      stage(attempt, "defect_graph", false,
            "not 2-degenerate; core size " + std::to_string(dcol.witness.size()), t);
      return a;
    }
    stage(attempt, "defect_graph", true, "", t);

    t = Clock::now();
    std::vector<ColourList> lists = la.lists;
    for (std::size_t i = 0; i < dg.members.size(); ++i) {
      const Vertex w = dg.members[i];
      lists[w] = ColourList::all().without(colour_at((*dcol.colouring)[i]));
    }
    PartialColouring outside(d_.n());
    for (Vertex v = 0; v < d_.n(); ++v)
      if (lists[v].empty()) outside[v] = c[v];
    try {
      a.colouring = acyclic_list_complete(d_, outside, lists);
    } catch (const CyclicListClass& e) {
      stage(attempt, "completion", false, e.what(), t);
      return a;
    }
    stage(attempt, "completion", true, "", t);
    return finish(attempt, std::move(a));
  }

  Attempt crude(std::size_t attempt, Seed seed) {
    const std::size_t n = d_.n();
    Attempt a;
    auto t = Clock::now();
    Rng rng(seed);
    Colouring3 c(n);
    for (auto& x : c) x = colour_at(static_cast<int>(rng.below(3)));
    a.colouring = c;

    // Robust vertices tolerate one out-neighbour switching to their colour.
    std::vector<char> in_u(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
      const auto same = out_colour_counts(d_, c, v)[index_of(c[v])];
      if (2 * static_cast<std::uint64_t>(same) + 2 > d_.out_degree(v)) {
        in_u[v] = 1;
        queue.push_back(v);
      }
    }
    const std::size_t u0 = queue.size();
    std::vector<std::uint32_t> cnt(n, 0);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : d_.in(queue[h]))
        if (!in_u[w] && ++cnt[w] >= 2) {
          in_u[w] = 1;
          queue.push_back(w);
        }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (in_u[v]) members.push_back(v);
    rep_.u_size = members.size();
    stage(attempt, "robust_set", true,
          "u0=" + std::to_string(u0) + " u=" + std::to_string(members.size()), t);

    t = Clock::now();
    const Graph sub = underlying_graph(induced_subdigraph(d_, members));
    auto part = degeneracy_colour(sub, 2);
    if (!part.colouring) {
      stage(attempt, "partition", false,
            "D[U] not 2-degenerate; core size " + std::to_string(part.witness.size()), t);
      return a;
    }
    stage(attempt, "partition", true, "", t);

    t = Clock::now();
    std::vector<ColourList> lists(n);
    PartialColouring outside(n);
    for (Vertex v = 0; v < n; ++v)
      if (!in_u[v]) outside[v] = c[v];
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Colour base = colour_at((*part.colouring)[i]);
      lists[members[i]] = ColourList::of(base, next_colour(base));
    }
    try {
      a.colouring = acyclic_list_complete(d_, outside, lists);
    } catch (const CyclicListClass& e) {
      stage(attempt, "completion", false, e.what(), t);
      return a;
    }
    stage(attempt, "completion", true, "", t);
    return finish(attempt, std::move(a));
  }

 private:
  Attempt finish(std::size_t attempt, Attempt a) {
    auto t = Clock::now();
    auto vm = verify_majority(d_, a.colouring);
    a.certified = vm.ok;
    stage(attempt, "verify", vm.ok, "violators=" + std::to_string(vm.violators.size()), t);
    return a;
  }

  static std::string cert_detail(const RepairCertificate& c) {
    std::string s;
    if (!c.l1) s += "L1 fails at vertex " + std::to_string(*c.l1_witness) + "; ";
    if (!c.l3) s += "L3 fails at vertex " + std::to_string(*c.l3_witness) + "; ";
    if (!c.l4) s += "L4 cycle of length " + std::to_string(c.l4_cycle.size()) + "; ";
    if (!c.l5) s += "L5 path of " + std::to_string(c.longest_size2_path) + " edges; ";
    return s;
  }

  void stage(std::size_t attempt, std::string name, bool ok, std::string detail,
             Clock::time_point start) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rep_.stages.push_back({attempt, std::move(name), ok, std::move(detail), ms});
  }

  const Digraph& d_;
  const PipelineParams& params_;
  PipelineReport& rep_;
};

}  // namespace

PipelineResult majority_3_colour(const Digraph& d, const PipelineParams& params, Seed seed) {
  PipelineResult out;
  PipelineReport& rep = out.report;
  rep.n = d.n();
  rep.arcs = d.arc_count();
  rep.density = d.n() > 1 ? static_cast<double>(d.arc_count()) /
                                (static_cast<double>(d.n()) * static_cast<double>(d.n() - 1))
                          : 0.0;
  rep.t0 = params.t0 ? params.t0 : default_t0(d.n());
  rep.ell = params.ell;
  rep.strategy = params.strategy == Strategy::Auto ? choose_strategy(d) : params.strategy;

  Runner runner(d, params, rep);
  std::optional<Attempt> best;
  std::size_t best_violators = SIZE_MAX;
  for (std::size_t attempt = 0; attempt <= params.max_retries; ++attempt) {
    rep.retries = attempt;
    const Seed s = derive_seed(seed, attempt);
    Attempt a;
    switch (rep.strategy) {
      case Strategy::Sparse: a = runner.sparse(attempt); break;
      case Strategy::CrudeDense: a = runner.crude(attempt, s); break;
      default: a = runner.main(attempt, s); break;
    }
    if (a.certified) {
      best = std::move(a);
      rep.status = PipelineStatus::Certified;
      break;
    }
    const auto viol = verify_majority(d, a.colouring).violators.size();
    if (viol < best_violators) {
      best_violators = viol;
      best = std::move(a);
    }
    // The proper-colouring path is deterministic; fall back to the main pipeline.
    if (rep.strategy == Strategy::Sparse) rep.strategy = Strategy::Main;
  }
  out.colouring = std::move(best->colouring);
  rep.violators = verify_majority(d, out.colouring).violators.size();
  if (rep.violators != 0) rep.status = PipelineStatus::BestEffort;
  return out;
}

}  // namespace majcol
