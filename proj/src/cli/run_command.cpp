#include "majcol/cli/run_command.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "majcol/bisection.hpp"
#include "majcol/cli/emit.hpp"
#include "majcol/edge_list.hpp"
#include "majcol/generators.hpp"
#include "majcol/numerics/calculus.hpp"
#include "majcol/numerics/lemmas.hpp"
#include "majcol/numerics/overlap.hpp"
#include "majcol/numerics/poisson_mixture.hpp"
#include "majcol/pipeline.hpp"
#include "majcol/recolour.hpp"
#include "majcol/repair.hpp"

namespace majcol::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kSchemaVersion = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Options shared by every subcommand.
struct Common {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  bool timings = false;
};

struct GraphSource {
  std::string input;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<double> lambda;
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--seed", c.seed, "Random seed (required for randomized subcommands)");
  sub.add_option("--out,-o", c.out, "Output path (stdout if omitted)");
  sub.add_option("--format", c.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_flag("--timings", c.timings, "Include wall-clock timings (outputs stop being reproducible)");
}

void add_source(CLI::App& sub, GraphSource& s, bool allow_input = true) {
  if (allow_input) sub.add_option("--input,-i", s.input, "Edge-list file to read instead of sampling");
  sub.add_option("--n", s.n, "Number of vertices");
  sub.add_option("--p", s.p, "Arc/edge probability");
  sub.add_option("--lambda", s.lambda, "Expected degree; p = lambda / n");
}

Seed require_seed(const Common& c) {
  if (!c.seed) throw UsageError("--seed is required");
  return Seed{*c.seed};
}

double resolve_p(const GraphSource& s) {
  if (s.p && s.lambda) throw UsageError("--p and --lambda are mutually exclusive");
  if (!s.n) throw UsageError("--n is required");
  double p = 0.0;
  if (s.lambda) {
    if (*s.n == 0) throw UsageError("--n must be positive with --lambda");
    p = *s.lambda / static_cast<double>(*s.n);
  } else if (s.p) {
    p = *s.p;
  } else {
    throw UsageError("one of --p or --lambda is required");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("resolved p must lie in [0,1]");
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json source_json(const GraphSource& s, std::optional<double> p) {
  Json j = Json::object();
  if (!s.input.empty()) {
    j["input"] = s.input;
  } else {
    j["n"] = *s.n;
    j["p"] = *p;
    if (s.lambda) j["lambda"] = *s.lambda;
  }
  return j;
}

struct LoadedDigraph {
  Digraph d;
  Json source;
};

LoadedDigraph load_digraph(const GraphSource& s, const Common& c) {
  if (!s.input.empty()) {
    if (s.n || s.p || s.lambda) throw UsageError("--input excludes --n, --p and --lambda");
    return {parse_digraph(read_file(s.input)), source_json(s, std::nullopt)};
  }
  const double p = resolve_p(s);
  return {gen_digraph(*s.n, p, require_seed(c)), source_json(s, p)};
}

void write_text(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_atomic(c.out, text);
  }
}

void write_json(const Common& c, const Json& j, std::ostream& out) { write_text(c, j.dump(2) + "\n", out); }

template <class T>
Json colours_json(const std::vector<T>& xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(static_cast<int>(x));
  return a;
}

Json certificate_json(const RepairCertificate& cert) {
  Json j;
  j["all"] = cert.all();
  j["l1"] = cert.l1;
  j["l3"] = cert.l3;
  j["l4"] = cert.l4;
  j["l5"] = cert.l5;
  j["u_size"] = cert.u_size;
  j["longest_size2_path"] = cert.longest_size2_path;
  if (cert.l1_witness) j["l1_witness"] = *cert.l1_witness;
  if (cert.l3_witness) j["l3_witness"] = *cert.l3_witness;
  if (!cert.l4_cycle.empty()) j["l4_cycle"] = cert.l4_cycle;
  if (!cert.l5_path.empty()) j["l5_path"] = cert.l5_path;
  return j;
}

Json kinds_json(const DefectKindCounts& k) {
  Json j;
  j["colour"] = k.colour;
  j["path"] = k.path;
  j["cycle"] = k.cycle;
  j["duplicate"] = k.duplicate;
  return j;
}

Json majority_json(const VerifyMajorityResult& v) {
  Json j;
  j["ok"] = v.ok;
  j["violators"] = v.violators.size();
  Json first = Json::array();
  for (std::size_t i = 0; i < v.violators.size() && i < 20; ++i) first.push_back(v.violators[i]);
  j["first_violators"] = first;
  return j;
}

Json report_json(const numerics::VerificationReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["pass"] = r.pass;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  Json items = Json::array();
  for (const auto& it : r.items) {
    Json i;
    i["name"] = it.name;
    i["pass"] = it.pass;
    i["value"] = it.value;
    i["bound"] = it.bound;
    i["margin"] = it.margin;
    if (!it.detail.empty()) i["detail"] = it.detail;
    items.push_back(i);
  }
  j["items"] = items;
  return j;
}

// ---- subcommands ----

struct GenArgs {
  Common common;
  GraphSource source;
  std::string kind = "digraph";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const double p = resolve_p(a.source);
  const Seed seed = require_seed(a.common);
  const std::string text = a.kind == "digraph" ? serialize_edge_list(gen_digraph(*a.source.n, p, seed))
                                               : serialize_edge_list(gen_graph(*a.source.n, p, seed));
  write_text(a.common, text, out);
  return kExitOk;
}

struct RecolourArgs {
  Common common;
  GraphSource source;
  std::string mode = "personality";
  std::size_t steps = 10;
};

int cmd_recolour(const RecolourArgs& a, std::ostream& out) {
  const Seed seed = require_seed(a.common);
  auto g = load_digraph(a.source, a.common);
  const auto mode = a.mode == "simple" ? RecolourMode::Simple : RecolourMode::PersonalityChanging;
  const auto t0 = Clock::now();
  const auto res = run_recolouring(g.d, mode, a.steps, seed);
  const double ms = millis_since(t0);
  Table t;
  t.columns = {"t", "nonmajority", "changed", "size1", "size2", "size3"};
  if (a.common.timings) t.columns.push_back("millis");
  for (const auto& r : res.trace.records) {
    std::vector<Cell> row{static_cast<std::int64_t>(r.t), static_cast<std::int64_t>(r.nonmajority),
                          static_cast<std::int64_t>(r.changed),
                          static_cast<std::int64_t>(r.class_sizes[0]),
                          static_cast<std::int64_t>(r.class_sizes[1]),
                          static_cast<std::int64_t>(r.class_sizes[2])};
    if (a.common.timings) row.emplace_back(ms);
    t.add(std::move(row));
  }
  write_text(a.common, render(t, parse_format(a.common.format)), out);
  return kExitOk;
}

struct ColourArgs {
  Common common;
  GraphSource source;
  PipelineParams params;
  std::string strategy = "auto";
  bool with_colouring = true;
};

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "sparse") return Strategy::Sparse;
  if (s == "main") return Strategy::Main;
  if (s == "crude") return Strategy::CrudeDense;
  throw UsageError("unknown strategy " + s);
}

int cmd_colour(ColourArgs a, std::ostream& out) {
  const Seed seed = require_seed(a.common);
  auto g = load_digraph(a.source, a.common);
  a.params.strategy = parse_strategy(a.strategy);
  const auto t0 = Clock::now();
  const auto res = majority_3_colour(g.d, a.params, seed);
  const double ms = millis_since(t0);
  const auto check = verify_majority(g.d, res.colouring);
  const auto& r = res.report;

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "colour";
  j["seed"] = seed.value;
  j["source"] = g.source;
  j["status"] = to_string(r.status);
  j["strategy"] = to_string(r.strategy);
  j["n"] = r.n;
  j["arcs"] = r.arcs;
  j["density"] = r.density;
  j["t0"] = r.t0;
  j["ell"] = r.ell;
  j["retries"] = r.retries;
  j["u_size"] = r.u_size;
  j["actions"] = r.actions;
  j["defect_kinds"] = kinds_json(r.defect_kinds);
  j["recolour_nonmajority"] = r.recolour_nonmajority;
  j["defect_graph"] = {{"vertices", r.defect_graph_vertices}, {"edges", r.defect_graph_edges}};
  if (r.certificate) j["repair_certificate"] = certificate_json(*r.certificate);
  j["majority_check"] = majority_json(check);
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json e;
    e["attempt"] = s.attempt;
    e["stage"] = s.stage;
    e["ok"] = s.ok;
    if (!s.detail.empty()) e["detail"] = s.detail;
    if (a.common.timings) e["millis"] = s.millis;
    stages.push_back(e);
  }
  j["stages"] = stages;
  if (a.common.timings) j["millis"] = ms;
  if (a.with_colouring) j["colouring"] = colours_json(res.colouring);
  write_json(a.common, j, out);
  return check.ok && r.status == PipelineStatus::Certified ? kExitOk : kExitFailed;
}

struct RepairArgs {
  Common common;
  GraphSource source;
  std::size_t t0 = 0;
  std::size_t ell = 50;
  bool with_lists = false;
};

int cmd_repair(const RepairArgs& a, std::ostream& out) {
  const Seed seed = require_seed(a.common);
  auto g = load_digraph(a.source, a.common);
  const std::size_t t0 = a.t0 ? a.t0 : default_t0(g.d.n());
  const auto clock = Clock::now();
  const auto rec = run_recolouring(g.d, RecolourMode::PersonalityChanging, t0, seed);
  const auto la = list_assignment_run(g.d, rec.final_colours, a.ell);
  const auto cert = verify_certificate(g.d, rec.final_colours, la);
  const double ms = millis_since(clock);

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "repair";
  j["seed"] = seed.value;
  j["source"] = g.source;
  j["t0"] = t0;
  j["ell"] = a.ell;
  j["n"] = g.d.n();
  j["u_size"] = la.u_size();
  j["defective"] = la.defective_vertices().size();
  j["actions"] = la.actions;
  j["defect_kinds"] = kinds_json(count_defect_kinds(la));
  j["certificate"] = certificate_json(cert);
  if (a.common.timings) j["millis"] = ms;
  if (a.with_lists) {
    Json lists = Json::array();
    for (Vertex v : la.listed_vertices()) {
      Json e;
      e["v"] = v;
      Json cs = Json::array();
      for (Colour c : la.lists[v].colours()) cs.push_back(to_int(c));
      e["list"] = cs;
      e["pd"] = la.pd[v];
      e["kind"] = la.defect_kind[v];
      lists.push_back(e);
    }
    j["lists"] = lists;
    j["colouring"] = colours_json(rec.final_colours);
  }
  write_json(a.common, j, out);
  return cert.all() ? kExitOk : kExitFailed;
}

struct BisectArgs {
  Common common;
  GraphSource source;
  std::optional<std::size_t> cycle;
  std::string mode = "internal";
  double eps = 0.1;
  std::size_t retries = 5;
  std::string trace;
};

int cmd_bisect(const BisectArgs& a, std::ostream& out) {
  const Seed seed = require_seed(a.common);
  Graph g;
  Json source;
  if (a.cycle) {
    if (!a.source.input.empty() || a.source.n) throw UsageError("--cycle excludes --input and --n");
    g = cycle_graph(*a.cycle);
    source["cycle"] = *a.cycle;
  } else if (!a.source.input.empty()) {
    g = parse_graph(read_file(a.source.input));
    source = source_json(a.source, std::nullopt);
  } else {
    const double p = resolve_p(a.source);
    g = gen_graph(*a.source.n, p, seed);
    source = source_json(a.source, p);
  }
  if (!(a.eps > 0.0 && a.eps < 1.0)) throw UsageError("--eps must lie in (0,1)");
  const auto mode = a.mode == "external" ? BisectMode::External : BisectMode::Internal;
  const auto clock = Clock::now();
  const auto res = almost_bisection(g, mode, a.eps, seed, a.retries);
  const double ms = millis_since(clock);
  // Independent recount for the certificate.
  const std::size_t bad = count_nonconforming(g, res.partition, mode);
  const bool bis = is_bisection(res.partition);
  const double frac = g.n() ? static_cast<double>(bad) / static_cast<double>(g.n()) : 0.0;

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "bisect";
  j["seed"] = seed.value;
  j["source"] = source;
  j["mode"] = to_string(mode);
  j["eps"] = a.eps;
  j["d_used"] = res.stats.d_used;
  j["trimmed"] = res.stats.trimmed;
  j["rounds_run"] = res.stats.rounds_run;
  j["retries"] = res.stats.retries;
  j["warnings"] = res.stats.warnings;
  j["certificate"] = {{"bisection", bis},
                      {"nonconforming", bad},
                      {"fraction", frac},
                      {"within_eps", frac <= a.eps},
                      {"cut", cut_size(g, res.partition)}};
  if (a.common.timings) j["millis"] = ms;
  j["partition"] = colours_json(res.partition);
  write_json(a.common, j, out);
  if (!a.trace.empty()) {
    Table t;
    t.columns = {"round", "nonconforming", "cut", "size1", "size2"};
    for (const auto& r : res.trace)
      t.add({static_cast<std::int64_t>(r.i), static_cast<std::int64_t>(r.z),
             static_cast<std::int64_t>(r.x), static_cast<std::int64_t>(r.size1),
             static_cast<std::int64_t>(r.size2)});
    emit(t, parse_format(a.common.format), a.trace);
  }
  return bis && frac <= a.eps ? kExitOk : kExitFailed;
}

struct VerifyArgs {
  Common common;
  bool all = false;
  std::vector<std::string> checks;
};

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"lemma-a",  "q-concavity", "p-slope",
                                              "poisson-mix", "g-mesh",   "q-oracle"};
  return names;
}

numerics::VerificationReport run_lemma(const std::string& name) {
  if (name == "lemma-a") return numerics::verify_lemma_a();
  if (name == "q-concavity") return numerics::verify_q_concavity();
  if (name == "p-slope") return numerics::verify_p_slope();
  if (name == "poisson-mix") return numerics::verify_poisson_mix();
  if (name == "g-mesh") return numerics::verify_g_mesh();
  if (name == "q-oracle") return numerics::verify_q_oracle();
  throw UsageError("unknown check " + name);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> todo = a.all ? lemma_names() : a.checks;
  if (todo.empty()) throw UsageError("name at least one check or pass --all");
  for (const auto& c : todo)
    if (std::find(lemma_names().begin(), lemma_names().end(), c) == lemma_names().end())
      throw UsageError("unknown check " + c);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";
  Json reports = Json::array();
  bool pass = true;
  for (const auto& name : todo) {
    const auto clock = Clock::now();
    auto rep = run_lemma(name);
    Json r = report_json(rep);
    if (a.common.timings) r["millis"] = millis_since(clock);
    reports.push_back(r);
    pass = pass && rep.pass;
    if (!rep.pass) {
      err << "FAILED " << rep.lemma << ":";
      for (const auto& it : rep.items)
        if (!it.pass) err << " [" << it.name << "]";
      err << "\n";
    }
  }
  j["pass"] = pass;
  j["reports"] = reports;
  write_json(a.common, j, out);
  return pass ? kExitOk : kExitFailed;
}

struct OverlapArgs {
  Common common;
  GraphSource source;
  std::vector<double> alphas{0.3, 0.5, 0.7};
  std::size_t trials = 10;
  double tolerance = 0.01;
};

int cmd_overlap(const OverlapArgs& a, std::ostream& out) {
  const Seed seed = require_seed(a.common);
  const double p = resolve_p(a.source);
  Table t;
  t.columns = {"alpha", "alpha_used", "p_same_hat", "se_same", "p_same", "p_same_exact",
               "p_diff_hat", "se_diff", "p_diff", "p_diff_exact", "single_hat", "se_single",
               "single_exact", "within_tol"};
  bool ok = true;
  for (std::size_t i = 0; i < a.alphas.size(); ++i) {
    const double alpha = a.alphas[i];
    if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie in (0,1)");
    const auto est = numerics::mc_overlap(*a.source.n, p, alpha, a.trials, derive_seed(seed, i));
    const auto lim = numerics::overlap_probs(alpha);
    const auto ex = numerics::exact_overlap(*a.source.n, p, alpha);
    const bool within = std::fabs(est.p_same_hat - lim.p_same) <= a.tolerance &&
                        std::fabs(est.p_diff_hat - lim.p_diff) <= a.tolerance &&
                        std::fabs(est.single_hat - 0.5) <= a.tolerance;
    ok = ok && within;
    t.add({alpha, est.alpha_used, est.p_same_hat, est.se_same, lim.p_same, ex.joint.p_same,
           est.p_diff_hat, est.se_diff, lim.p_diff, ex.joint.p_diff, est.single_hat, est.se_single,
           ex.single, within});
  }
  write_text(a.common, render(t, parse_format(a.common.format)), out);
  return ok ? kExitOk : kExitFailed;
}

struct RecurrenceArgs {
  Common common;
  std::vector<double> lambdas{0.5, 1.0, 5.0, 10.0, 20.0, 30.0};
  std::size_t steps = 100;
};

int cmd_recurrence(const RecurrenceArgs& a, std::ostream& out) {
  if (a.steps == 0) throw UsageError("--steps must be positive");
  Table t;
  t.columns = {"lambda", "t", "f", "f_upper", "bound", "within"};
  bool ok = true;
  for (double lambda : a.lambdas) {
    if (!(lambda >= 0.0)) throw UsageError("--lambda must be >= 0");
    const auto tr = numerics::fixed_point_trace(lambda, a.steps);
    for (std::size_t i = 0; i < tr.f.size(); ++i) {
      const double bound = std::pow(0.9999, static_cast<double>(i)) / 3.0;
      const bool within = tr.f_upper[i] <= bound;
      ok = ok && within;
      t.add({lambda, static_cast<std::int64_t>(i + 1), tr.f[i], tr.f_upper[i], bound, within});
    }
  }
  write_text(a.common, render(t, parse_format(a.common.format)), out);
  return ok ? kExitOk : kExitFailed;
}

// ---- config ----

std::string config_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw UsageError("config values must be scalars or arrays of scalars");
}

void apply_config(CLI::App& sub, const std::string& path) {
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad config " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  if (!cfg.contains("schema_version") || cfg["schema_version"] != kSchemaVersion)
    throw UsageError("config schema_version must be " + std::to_string(kSchemaVersion));
  for (const auto& [key, val] : cfg.items()) {
    if (key == "schema_version") continue;
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (!opt) opt = sub.get_option_no_throw(key);  // positionals
    if (!opt) throw UsageError("config key '" + key + "' is not an option of " + sub.get_name());
    if (opt->count() > 0) continue;  // flags win
    if (val.is_array()) {
      for (const auto& x : val) opt->add_result(config_scalar(x));
    } else {
      opt->add_result(config_scalar(val));
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majority colourings of random digraphs and almost-bisections of random graphs", "majcol"};
  app.require_subcommand(1);
  std::string config;

  GenArgs gen;
  auto* s_gen = app.add_subcommand("gen", "Sample a random digraph or graph as an edge list");
  add_common(*s_gen, gen.common);
  add_source(*s_gen, gen.source, false);
  s_gen->add_option("--graph", gen.kind, "digraph or graph")->check(CLI::IsMember({"digraph", "graph"}));

  RecolourArgs rec;
  auto* s_rec = app.add_subcommand("recolour", "Run the recolouring process and print its trace");
  add_common(*s_rec, rec.common);
  add_source(*s_rec, rec.source);
  s_rec->add_option("--mode", rec.mode, "simple or personality")
      ->check(CLI::IsMember({"simple", "personality"}));
  s_rec->add_option("--steps", rec.steps, "Number of steps");

  ColourArgs col;
  auto* s_col = app.add_subcommand("colour", "Majority 3-colouring with a certificate");
  add_common(*s_col, col.common);
  add_source(*s_col, col.source);
  s_col->add_option("--t0", col.params.t0, "Recolouring steps (0 = automatic)");
  s_col->add_option("--ell", col.params.ell, "Path danger cap");
  s_col->add_option("--retries", col.params.max_retries, "Maximum attempts");
  s_col->add_option("--strategy", col.strategy, "auto, sparse, main or crude")
      ->check(CLI::IsMember({"auto", "sparse", "main", "crude"}));
  s_col->add_flag("!--no-colouring", col.with_colouring, "Omit the colouring array");

  RepairArgs rep;
  auto* s_rep = app.add_subcommand("repair", "Recolouring plus list assignment, with certificate");
  add_common(*s_rep, rep.common);
  add_source(*s_rep, rep.source);
  s_rep->add_option("--t0", rep.t0, "Recolouring steps (0 = automatic)");
  s_rep->add_option("--ell", rep.ell, "Path danger cap");
  s_rep->add_flag("--lists", rep.with_lists, "Include the lists and the colouring");

  BisectArgs bis;
  auto* s_bis = app.add_subcommand("bisect", "Almost internal or external bisection");
  add_common(*s_bis, bis.common);
  add_source(*s_bis, bis.source);
  s_bis->add_option("--cycle", bis.cycle, "Use the cycle on this many vertices");
  s_bis->add_option("--mode", bis.mode, "internal or external")
      ->check(CLI::IsMember({"internal", "external"}));
  s_bis->add_option("--eps", bis.eps, "Allowed non-conforming fraction");
  s_bis->add_option("--retries", bis.retries, "Maximum attempts");
  s_bis->add_option("--trace", bis.trace, "Write the flip trace here");

  VerifyArgs ver;
  auto* s_ver = app.add_subcommand("verify", "Re-run the computer-assisted checks");
  add_common(*s_ver, ver.common);
  s_ver->add_flag("--all", ver.all, "Run every check");
  s_ver->add_option("checks", ver.checks, "Checks to run")->check(CLI::IsMember(lemma_names()));

  OverlapArgs ovl;
  auto* s_ovl = app.add_subcommand("overlap", "Monte Carlo overlap frequencies against the arctan law");
  add_common(*s_ovl, ovl.common);
  add_source(*s_ovl, ovl.source, false);
  s_ovl->add_option("--alpha", ovl.alphas, "Overlaps to test");
  s_ovl->add_option("--trials", ovl.trials, "Digraphs sampled per overlap");
  s_ovl->add_option("--tolerance", ovl.tolerance, "Allowed distance from the limit values");

  RecurrenceArgs rcr;
  auto* s_rcr = app.add_subcommand("recurrence", "Fixed-point trace f_t = 2 P_lambda(f_{t-1})");
  add_common(*s_rcr, rcr.common);
  s_rcr->add_option("--lambda", rcr.lambdas, "Mean degrees");
  s_rcr->add_option("--steps", rcr.steps, "Number of terms");

  for (auto* sub : {s_gen, s_rec, s_col, s_rep, s_bis, s_ver, s_ovl, s_rcr})
    sub->add_option("--config", config, "JSON config; command-line flags take precedence");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config.empty()) apply_config(*sub, config);
    if (sub == s_gen) return cmd_gen(gen, out);
    if (sub == s_rec) return cmd_recolour(rec, out);
    if (sub == s_col) return cmd_colour(col, out);
    if (sub == s_rep) return cmd_repair(rep, out);
    if (sub == s_bis) return cmd_bisect(bis, out);
    if (sub == s_ver) return cmd_verify(ver, out, err);
    if (sub == s_ovl) return cmd_overlap(ovl, out);
    if (sub == s_rcr) return cmd_recurrence(rcr, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace majcol::cli
