#include <doctest.h>

#include "majcol/generators.hpp"
#include "majcol/pipeline.hpp"
#include "majcol/repair.hpp"

using namespace majcol;

TEST_SUITE("pipeline") {

TEST_CASE("default t0 clamps") {
  CHECK(default_t0(10) == 10);
  CHECK(default_t0(1000000) == 10);  // (ln ln 1e6)^2 ~ 6.9
  CHECK(default_t0(std::size_t{1} << 62) >= 14);
}

TEST_CASE("trivial inputs") {
  const auto r0 = majority_3_colour(Digraph(), {}, Seed{1});
  CHECK(r0.colouring.empty());
  CHECK(r0.report.status == PipelineStatus::Certified);

  const auto r1 = majority_3_colour(Digraph(5, {}), {}, Seed{1});
  CHECK(r1.colouring.size() == 5);
  CHECK(verify_majority(Digraph(5, {}), r1.colouring).ok);

  for (std::size_t n : {3, 4, 7}) {
    const Digraph cyc = directed_cycle(n);
    const auto r = majority_3_colour(cyc, {}, Seed{n});
    CAPTURE(n);
    CHECK(r.report.strategy == Strategy::Sparse);
    CHECK(verify_majority(cyc, r.colouring).ok);
  }
}

TEST_CASE("strategy selection") {
  CHECK(choose_strategy(directed_cycle(9)) == Strategy::Sparse);
  const Digraph dense = gen_digraph(200, 0.9, Seed{2});
  CHECK(choose_strategy(dense) == Strategy::CrudeDense);
  const Digraph mid = gen_digraph(5000, 3.0 / 5000, Seed{2});
  CHECK(choose_strategy(mid) == Strategy::Main);
}

TEST_CASE("forced strategies give majority colourings on sparse inputs") {
  for (auto st : {Strategy::Sparse, Strategy::Main, Strategy::Auto}) {
    for (std::uint64_t s = 0; s < 4; ++s) {
      const std::size_t n = 600;
      const Digraph d = gen_digraph(n, (1.0 + 2.0 * double(s)) / n, Seed{s});
      PipelineParams pp;
      pp.strategy = st;
      const auto r = majority_3_colour(d, pp, Seed{s + 9});
      const std::string name = to_string(st);
      CAPTURE(name);
      CAPTURE(s);
      CHECK(r.report.status == PipelineStatus::Certified);
      CHECK(verify_majority(d, r.colouring).ok);
      CHECK(r.report.violators == 0);
      CHECK(r.report.actions <= 2 * n);
    }
  }
}

TEST_CASE("crude strategy on dense inputs") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Digraph d = gen_digraph(300, 0.9, Seed{s});
    PipelineParams pp;
    pp.strategy = Strategy::CrudeDense;
    const auto r = majority_3_colour(d, pp, Seed{s});
    CHECK(r.report.status == PipelineStatus::Certified);
    CHECK(verify_majority(d, r.colouring).ok);
  }
  // Forced onto a sparse digraph it may give up, but never claims success falsely.
  const Digraph sparse = gen_digraph(600, 3.0 / 600, Seed{1});
  PipelineParams pp;
  pp.strategy = Strategy::CrudeDense;
  const auto r = majority_3_colour(sparse, pp, Seed{1});
  CHECK((r.report.status == PipelineStatus::Certified) == verify_majority(sparse, r.colouring).ok);
}

TEST_CASE("main strategy on a larger sparse digraph") {
  const std::size_t n = 20000;
  const Digraph d = gen_digraph(n, 5.0 / n, Seed{44});
  PipelineParams pp;
  pp.strategy = Strategy::Main;
  const auto r = majority_3_colour(d, pp, Seed{45});
  CHECK(r.report.status == PipelineStatus::Certified);
  REQUIRE(r.report.certificate.has_value());
  CHECK(r.report.certificate->all());
  CHECK(r.report.u_size * 10 <= n);
  CHECK(verify_majority(d, r.colouring).ok);
}

TEST_CASE("pipeline is deterministic") {
  const Digraph d = gen_digraph(3000, 4.0 / 3000, Seed{5});
  const auto a = majority_3_colour(d, {}, Seed{6});
  const auto b = majority_3_colour(d, {}, Seed{6});
  CHECK(a.colouring == b.colouring);
  CHECK(a.report.u_size == b.report.u_size);
}

}
