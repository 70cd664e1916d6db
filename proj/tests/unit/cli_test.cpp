#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "majcol/cli/emit.hpp"
#include "majcol/cli/run_command.hpp"
#include "majcol/edge_list.hpp"

using namespace majcol;
using namespace majcol::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = run_command(args, o, e);
  return {code, o.str(), e.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("majcol_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
            std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("empty table renders a header only") {
  Table t;
  t.columns = {"a", "b"};
  CHECK(render(t, Format::Csv) == "a,b\n");
  CHECK(render(t, Format::Json) == "[]\n");
}

TEST_CASE("csv round trip keeps types and bytes") {
  Table t;
  t.columns = {"i", "x", "flag", "name"};
  t.add({std::int64_t{-3}, 0.1, true, std::string("a,b")});
  t.add({std::int64_t{7}, 1e-300, false, std::string("plain")});
  t.add({std::int64_t{0}, 2.5, false, std::string("say \"hi\"")});
  const std::string csv = render(t, Format::Csv);
  const Table back = load_csv(csv);
  CHECK(back == t);
  CHECK(render(back, Format::Csv) == csv);
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK_THROWS(t.add({std::int64_t{1}}));
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("json rendering is ordered") {
  Table t;
  t.columns = {"z", "a"};
  t.add({std::int64_t{1}, std::string("q")});
  const auto j = nlohmann::ordered_json::parse(render(t, Format::Json));
  REQUIRE(j.size() == 1);
  CHECK(j[0].begin().key() == "z");
}

TEST_CASE("atomic writes leave no temporary file") {
  TempDir dir;
  const fs::path p = dir.path / "x.csv";
  write_atomic(p, "hello\n");
  write_atomic(p, "again\n");
  CHECK(slurp(p) == "again\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
  CHECK(files == 1);
  CHECK_THROWS_AS(write_atomic(dir.path / "missing" / "y.csv", "z"), IoError);
}

TEST_CASE("gen writes the complete digraph") {
  const auto r = run({"gen", "--graph", "digraph", "--n", "4", "--p", "1", "--seed", "0"});
  REQUIRE(r.code == kExitOk);
  const Digraph d = parse_digraph(r.out);
  CHECK(d.n() == 4);
  CHECK(d.arc_count() == 12);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"gen", "--n", "4", "--p", "0.5"}).code == kExitUsage);  // no seed
  CHECK(run({"gen", "--n", "4", "--p", "0.5", "--lambda", "2", "--seed", "1"}).code == kExitUsage);
  CHECK(run({"gen", "--bogus"}).code == kExitUsage);
  CHECK(run({"nosuch"}).code == kExitUsage);
  CHECK(run({"recolour", "--n", "10", "--p", "0.1", "--seed", "1", "--mode", "odd"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"verify", "lemma-z"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify exit codes follow the reports") {
  const auto ok = run({"verify", "lemma-a"});
  CHECK(ok.code == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.dump().find("lemma-a") != std::string::npos);
  const auto bad = run({"verify", "poisson-mix"});
  CHECK(bad.code == kExitFailed);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("recolour output is deterministic and reloadable") {
  TempDir dir;
  const std::vector<std::string> base{"recolour", "--n", "2000", "--lambda", "4", "--seed", "11",
                                      "--steps", "6", "--format", "csv"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", (dir.path / "a.csv").string()});
  b.insert(b.end(), {"--out", (dir.path / "b.csv").string()});
  REQUIRE(run(a).code == kExitOk);
  REQUIRE(run(b).code == kExitOk);
  const std::string ca = slurp(dir.path / "a.csv");
  CHECK(ca == slurp(dir.path / "b.csv"));
  const Table t = load_csv(ca);
  CHECK(t.rows.size() == 7);
  CHECK(render(t, Format::Csv) == ca);
  const auto other = run({"recolour", "--n", "2000", "--lambda", "4", "--seed", "12", "--steps", "6",
                          "--format", "csv"});
  CHECK(other.out != ca);
}

TEST_CASE("config values yield to flags") {
  TempDir dir;
  const fs::path cfg = dir.path / "cfg.json";
  write_atomic(cfg, R"({"schema_version": 1, "n": 5, "p": 1, "seed": 3, "graph": "digraph"})");
  const auto from_cfg = run({"gen", "--config", cfg.string()});
  REQUIRE(from_cfg.code == kExitOk);
  CHECK(parse_digraph(from_cfg.out).arc_count() == 20);
  const auto flag_wins = run({"gen", "--config", cfg.string(), "--n", "3"});
  REQUIRE(flag_wins.code == kExitOk);
  CHECK(parse_digraph(flag_wins.out).arc_count() == 6);

  write_atomic(cfg, R"({"schema_version": 2, "n": 5})");
  CHECK(run({"gen", "--config", cfg.string()}).code == kExitUsage);
}

TEST_CASE("colour and bisect carry certificates") {
  const auto c = run({"colour", "--n", "3000", "--lambda", "3", "--seed", "4", "--no-colouring"});
  CHECK(c.code == kExitOk);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["status"] == "Certified");
  CHECK(j.contains("majority_check"));
  CHECK_FALSE(j.contains("colouring"));

  const auto b = run({"bisect", "--cycle", "200", "--eps", "0.1", "--seed", "2"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("nonconforming") != std::string::npos);
}

TEST_CASE("recurrence table") {
  const auto r = run({"recurrence", "--lambda", "1", "--lambda", "5", "--steps", "20", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  const Table t = load_csv(r.out);
  CHECK(t.rows.size() == 40);
}

}
