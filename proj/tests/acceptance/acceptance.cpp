// One line per criterion: "criterion N: PASS|FAIL <summary> (<runtime> s / <limit> s)".
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "majcol/bisection.hpp"
#include "majcol/cli/run_command.hpp"
#include "majcol/generators.hpp"
#include "majcol/gw_sampler.hpp"
#include "majcol/numerics/calculus.hpp"
#include "majcol/numerics/lemmas.hpp"
#include "majcol/numerics/overlap.hpp"
#include "majcol/numerics/overtake.hpp"
#include "majcol/numerics/poisson_mixture.hpp"
#include "majcol/pipeline.hpp"
#include "majcol/recolour.hpp"
#include "majcol/repair.hpp"

using namespace majcol;
namespace num = majcol::numerics;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
};

std::string fmt(const char* f, auto... xs) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

void report_failures(Outcome& o, const num::VerificationReport& r) {
  for (const auto& it : r.items)
    if (!it.pass)
      o.require(false, r.lemma + ": " + it.name + fmt(" (value %.10g, bound %.10g)", it.value, it.bound));
}

Outcome exact_constants() {
  Outcome o;
  const num::Rational a = 2 * num::q_prime0(7), b = 2 * num::q_prime0(9), c = 2 * num::q_prime0(11);
  o.require(a == num::Rational(2240, 2187), "2Q7'(0) = " + a.get_str());
  o.require(b == num::Rational(2240, 2187), "2Q9'(0) = " + b.get_str());
  o.require(c == num::Rational(19712, 19683), "2Q11'(0) = " + c.get_str());
  o.summary = "2Q7'(0)=" + a.get_str() + " 2Q9'(0)=" + b.get_str() + " 2Q11'(0)=" + c.get_str();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (std::size_t d = 0; d <= 7; ++d)
    o.require(num::q_poly(d) == num::q_oracle_poly(d), fmt("q_poly(%zu) vs enumeration", d));
  for (std::size_t d = 0; d <= 40; ++d)
    o.require(num::q_poly(d).derivative().evaluate(num::Rational(0)) == num::q_prime0(d),
              fmt("slope at 0, d=%zu", d));
  o.summary = "polynomials d<=7 and slopes d<=40 compared exactly";
  return o;
}

Outcome p_slope() {
  Outcome o;
  const auto r = num::verify_p_slope();
  report_failures(o, r);
  double slope = 0.0, chord = 0.0;
  for (const auto& it : r.items) {
    if (it.name.rfind("max 2P'", 0) == 0) slope = it.value;
    if (it.name.rfind("P_lambda(f) <=", 0) == 0) chord = it.margin;
  }
  o.summary = fmt("max 2P'(0) = %.6f (slack %.6f to 0.9999), chord slack %.3g", slope, 0.9999 - slope, chord);
  return o;
}

Outcome coefficient_suite() {
  Outcome o;
  const auto a = num::verify_lemma_a();
  const auto c = num::verify_q_concavity();
  const auto m = num::verify_poisson_mix();
  report_failures(o, a);
  report_failures(o, c);
  report_failures(o, m);
  double mix_sup = 0.0;
  for (const auto& it : m.items)
    if (it.name.find("sup") != std::string::npos) mix_sup = std::max(mix_sup, it.value);
  o.summary = fmt("lemma-a %s, concavity %s, poisson mixture sup %.6f", a.pass ? "ok" : "bad",
                  c.pass ? "ok" : "bad", mix_sup);
  return o;
}

Outcome mesh_suite() {
  Outcome o;
  const auto r = num::verify_g_mesh();
  report_failures(o, r);
  o.summary = fmt("%zu items", r.items.size());
  for (const auto& it : r.items)
    if (it.name.find("outer mesh") != std::string::npos)
      o.summary += fmt(", outer mesh max %.6g", it.value);
  return o;
}

Outcome recurrence() {
  Outcome o;
  double worst_ratio = 0.0;
  for (double lambda : {0.5, 1.0, 5.0, 10.0, 20.0, 30.0}) {
    const auto tr = num::fixed_point_trace(lambda, 100);
    const double bound = std::pow(0.9999, 99.0) / 3.0;
    const double fT = tr.f_upper.back();
    worst_ratio = std::max(worst_ratio, fT / bound);
    o.require(fT <= bound, fmt("lambda=%g: f_100 <= %.6g, bound %.6g", lambda, fT, bound));
  }
  o.summary = fmt("max f_100 / bound = %.3g", worst_ratio);
  return o;
}

Outcome gw_bound() {
  Outcome o;
  const std::vector<std::size_t> times{5, 10, 20};
  double worst = -1.0;
  for (double lambda : {1.0, 5.0, 10.0, 20.0}) {
    const auto est = gw_root_nonmajority(lambda, times, 100000,
                                         derive_seed(Seed{2024}, static_cast<std::uint64_t>(lambda)));
    for (const auto& e : est) {
      const double bound = std::pow(0.9999, double(e.t)) + 3.0 * e.sigma();
      worst = std::max(worst, e.frequency() - bound);
      o.details.push_back(fmt("lambda=%g t=%zu freq=%.5f sigma=%.2g", lambda, e.t, e.frequency(), e.sigma()));
      o.require(e.frequency() <= bound, fmt("lambda=%g t=%zu", lambda, e.t));
    }
  }
  o.summary = fmt("12 (lambda,t) pairs, 1e5 trees each, worst freq - bound %.4f", worst);
  return o;
}

Outcome pipeline_runs(bool repair_focus) {
  Outcome o;
  const std::size_t n = 20000;
  std::size_t worst_u = 0, worst_actions = 0;
  for (double lambda : {0.05, 0.5, 2.0, 5.0, 20.0}) {
    int certified = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Seed seed = derive_seed(Seed{static_cast<std::uint64_t>(lambda * 100)}, s);
      const Digraph d = gen_digraph(n, lambda / double(n), seed);
      const auto res = majority_3_colour(d, {}, derive_seed(seed, 1));
      const bool cert = res.report.status == PipelineStatus::Certified;
      certified += cert;
      if (cert) o.require(verify_majority(d, res.colouring).ok, fmt("lambda=%g seed %llu verify", lambda, (unsigned long long)s));
      if (res.report.certificate) o.require(res.report.certificate->all(), fmt("pipeline certificate lambda=%g", lambda));
      o.require(res.report.actions <= 2 * n, fmt("pipeline actions lambda=%g", lambda));

      // Stand-alone repair pass, so every run is covered whatever strategy was used.
      const auto rc = run_recolouring(d, RecolourMode::PersonalityChanging, default_t0(n), derive_seed(seed, 2));
      const auto la = list_assignment_run(d, rc.final_colours, 50);
      const auto ct = verify_certificate(d, rc.final_colours, la);
      o.require(ct.l1 && ct.l3 && ct.l4 && ct.l5, fmt("repair certificate lambda=%g seed %llu", lambda, (unsigned long long)s));
      o.require(la.actions <= 2 * n, fmt("repair actions lambda=%g", lambda));
      worst_actions = std::max(worst_actions, la.actions);
      if (lambda == 2.0 || lambda == 5.0) {
        worst_u = std::max(worst_u, la.u_size());
        o.require(la.u_size() * 10 <= n, fmt("|U|=%zu lambda=%g", la.u_size(), lambda));
      }
    }
    o.details.push_back(fmt("lambda=%g certified %d/10", lambda, certified));
    if (!repair_focus) o.require(certified >= 9, fmt("lambda=%g certified %d/10", lambda, certified));
  }
  o.summary = repair_focus ? fmt("max |U| at lambda 2,5: %zu of %zu; max actions %zu", worst_u, n, worst_actions)
                           : "50 runs, 5 lambdas";
  return o;
}

Outcome bisection() {
  Outcome o;
  const Graph cycle = cycle_graph(1000);
  std::string counts;
  for (auto mode : {BisectMode::Internal, BisectMode::External}) {
    for (int which = 0; which < 2; ++which) {
      int good = 0;
      for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = which == 0 ? cycle : gen_graph(100000, 5.0 / 100000, derive_seed(Seed{77}, s));
        const auto r = almost_bisection(g, mode, 0.1, derive_seed(Seed{78}, s));
        const auto bad = count_nonconforming(g, r.partition, mode);
        good += is_bisection(r.partition) && double(bad) <= 0.1 * double(g.n());
      }
      counts += fmt(" %s/%s %d/10", which == 0 ? "C1000" : "G(1e5)", to_string(mode), good);
      o.require(good >= 9, fmt("%s %s only %d/10", which == 0 ? "cycle" : "random graph", to_string(mode), good));
    }
  }
  // Single-flip spot checks.
  Rng rng(Seed{5150});
  const Graph g = gen_graph(2000, 5.0 / 2000, Seed{5151});
  Partition2 part(g.n());
  for (auto& s : part) s = rng.below(2) ? Side::One : Side::Two;
  std::size_t flips = 0;
  while (flips < 1000) {
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!internal_status(g, part, v, BisectMode::Internal)) bad.push_back(v);
    if (bad.empty()) {
      for (auto& s : part) s = rng.below(2) ? Side::One : Side::Two;
      continue;
    }
    const Vertex v = bad[rng.below(bad.size())];
    const auto before = cut_size(g, part);
    part[v] = other(part[v]);
    o.require(cut_size(g, part) <= before, "single flip increased the cut");
    ++flips;
  }
  o.summary = "ok counts:" + counts + fmt("; %zu single flips", flips);
  return o;
}

Outcome overlap() {
  Outcome o;
  const std::size_t n = 100000;
  const double p = 50.0 / double(n);
  for (double alpha : {0.3, 0.5, 0.7}) {
    const auto lim = num::overlap_probs(alpha);
    const auto mc = num::mc_overlap(n, p, alpha, 10, derive_seed(Seed{31337}, static_cast<std::uint64_t>(alpha * 10)));
    const auto ex = num::exact_overlap(n, p, alpha);
    o.details.push_back(fmt("alpha=%g same %.4f (limit %.4f, exact %.4f) diff %.4f (limit %.4f, exact %.4f) single %.4f (exact %.4f)",
                            alpha, mc.p_same_hat, lim.p_same, ex.joint.p_same, mc.p_diff_hat, lim.p_diff,
                            ex.joint.p_diff, mc.single_hat, ex.single));
    o.require(std::fabs(mc.p_same_hat - lim.p_same) <= 0.01, fmt("alpha=%g p_same %.4f vs %.4f", alpha, mc.p_same_hat, lim.p_same));
    o.require(std::fabs(mc.p_diff_hat - lim.p_diff) <= 0.01, fmt("alpha=%g p_diff %.4f vs %.4f", alpha, mc.p_diff_hat, lim.p_diff));
    o.require(std::fabs(mc.single_hat - 0.5) <= 0.01, fmt("alpha=%g single %.4f vs 0.5", alpha, mc.single_hat));
    const double sum = mc.p_same_hat + mc.p_diff_hat;
    o.require(std::fabs(sum - 0.5) <= 0.01, fmt("alpha=%g p_same+p_diff %.4f", alpha, sum));
  }
  o.summary = "n=1e5, np=50, 10 digraphs per alpha";
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / fmt("majcol_accept_%d", static_cast<int>(std::rand()));
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> runs{
      {"gen", "--graph", "digraph", "--n", "5000", "--lambda", "3", "--seed", "9"},
      {"gen", "--graph", "graph", "--n", "5000", "--lambda", "3", "--seed", "9"},
      {"recolour", "--n", "20000", "--lambda", "5", "--seed", "9", "--format", "json"},
      {"colour", "--n", "20000", "--lambda", "5", "--seed", "3"},
      {"repair", "--n", "20000", "--lambda", "5", "--seed", "3", "--lists"},
      {"bisect", "--n", "20000", "--lambda", "5", "--seed", "4", "--mode", "external"},
      {"overlap", "--n", "20000", "--lambda", "20", "--alpha", "0.5", "--trials", "2", "--seed", "5"},
  };
  std::size_t k = 0;
  for (const auto& base : runs) {
    std::string bytes[2];
    for (int rep = 0; rep < 2; ++rep) {
      auto args = base;
      const fs::path out = dir / fmt("run%zu_%d.out", k, rep);
      args.insert(args.end(), {"--out", out.string()});
      if (base[0] == "bisect") args.insert(args.end(), {"--trace", (dir / fmt("trace%zu_%d.csv", k, rep)).string()});
      std::ostringstream so, se;
      const int code = cli::run_command(args, so, se);
      o.require(code == cli::kExitOk || code == cli::kExitFailed, base[0] + " exit code " + std::to_string(code));
      std::ifstream in(out, std::ios::binary);
      std::ostringstream s;
      s << in.rdbuf();
      bytes[rep] = s.str();
      if (base[0] == "bisect") {
        std::ifstream tr(dir / fmt("trace%zu_%d.csv", k, rep), std::ios::binary);
        std::ostringstream ts;
        ts << tr.rdbuf();
        bytes[rep] += ts.str();
      }
    }
    o.require(!bytes[0].empty() && bytes[0] == bytes[1], base[0] + " output differs between runs");
    ++k;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  o.summary = fmt("%zu subcommand runs repeated", runs.size());
  return o;
}

struct Criterion {
  int id;
  double limit_s;
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "Run just this criterion (1-12)");
  app.add_flag("--verbose,-v", verbose, "Print per-case details");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, 1, exact_constants},        {2, 120, oracle_equivalence},
      {3, 300, p_slope},              {4, 300, coefficient_suite},
      {5, 120, mesh_suite},           {6, 60, recurrence},
      {7, 600, gw_bound},             {8, 900, [] { return pipeline_runs(false); }},
      {9, 900, [] { return pipeline_runs(true); }}, {10, 600, bisection},
      {11, 600, overlap},             {12, 120, determinism},
  };
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.pass && secs <= c.limit_s;
    if (o.pass && !ok) o.details.push_back("over the time limit");
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " " << o.summary
              << fmt(" (%.2f s / %.0f s)", secs, c.limit_s) << "\n";
    for (const auto& d : o.details)
      if (verbose || d.rfind("failed", 0) == 0 || !ok) std::cout << "    " << d << "\n";
    all_pass = all_pass && ok;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
