#include <doctest.h>

#include <cmath>
#include <numbers>

#include "majcol/numerics/calculus.hpp"
#include "majcol/numerics/lemmas.hpp"
#include "majcol/numerics/overlap.hpp"
#include "majcol/numerics/overtake.hpp"
#include "majcol/numerics/poisson_mixture.hpp"
#include "majcol/numerics/rational_polynomial.hpp"

using namespace majcol;
using namespace majcol::numerics;

namespace {

const ReportItem* find_item(const VerificationReport& r, const std::string& prefix) {
  for (const auto& it : r.items)
    if (it.name.rfind(prefix, 0) == 0) return &it;
  return nullptr;
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("rational polynomial arithmetic") {
  const RationalPolynomial one_plus_f({Rational(1), Rational(1)});
  const auto sq = one_plus_f * one_plus_f;
  CHECK(sq == RationalPolynomial({Rational(1), Rational(2), Rational(1)}));
  CHECK(one_plus_f.pow(3).coeff(2) == 3);
  CHECK(sq.derivative() == RationalPolynomial({Rational(2), Rational(2)}));
  CHECK(sq.evaluate(Rational(1, 2)) == Rational(9, 4));
  CHECK(sq.evaluate(0.5) == doctest::Approx(2.25));
  CHECK((sq - sq).is_zero());
  CHECK((sq - sq).degree() == -1);
  CHECK(RationalPolynomial({Rational(0), Rational(0)}).is_zero());
  CHECK(RationalPolynomial::monomial(Rational(3), 4).degree() == 4);
  CHECK((one_plus_f * Rational(1, 3)).coeff(1) == Rational(1, 3));
  CHECK(RationalPolynomial({Rational(1), Rational(-2)}).abs_bound(Rational(1, 2)) == 2);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(40, 20) == Integer("137846528820"));
  CHECK_FALSE(sq.to_string().empty());
}

TEST_CASE("non-majority probability under a uniform colouring") {
  CHECK(nonmajority_prob(0) == 0);
  CHECK(nonmajority_prob(1) == Rational(1, 3));
  CHECK(nonmajority_prob(2) == Rational(1, 9));
  CHECK(nonmajority_prob(3) == Rational(7, 27));
  for (std::size_t d = 1; d <= 60; ++d) {
    CHECK(nonmajority_prob_double(d) == doctest::Approx(nonmajority_prob(d).get_d()).epsilon(1e-12));
    CHECK(nonmajority_prob_double(d) <= overtake_upper_bound(d) + 1e-15);
  }
}

TEST_CASE("overtake polynomials") {
  CHECK(q_poly(0).is_zero());
  for (std::size_t d = 0; d <= kMaxOracleDegree; ++d) CHECK(q_poly(d) == q_oracle_poly(d));
  CHECK(2 * q_prime0(7) == Rational(2240, 2187));
  CHECK(2 * q_prime0(9) == Rational(2240, 2187));
  CHECK(2 * q_prime0(11) == Rational(19712, 19683));
  for (std::size_t d = 1; d <= 30; ++d) {
    CHECK(q_poly(d).derivative().evaluate(Rational(0)) == q_prime0(d));
    CHECK(q_prime0_double(d) == doctest::Approx(q_prime0(d).get_d()).epsilon(1e-12));
  }
  for (double f : {0.0, 0.05, 0.2, 1.0 / 3.0}) {
    const auto q = q_values_upto(30, f);
    REQUIRE(q.size() == 31);
    for (std::size_t d = 0; d <= 30; ++d) {
      CAPTURE(d);
      CAPTURE(f);
      CHECK(q[d] == doctest::Approx(q_poly(d).evaluate(f)).epsilon(1e-10));
      CHECK(q[d] <= overtake_upper_bound(d) + 1e-12);
    }
  }
}

TEST_CASE("poisson mixtures") {
  double s = 0.0;
  for (double w : poisson_weights(7.5, 200)) s += w;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(poisson_tail_bound(5.0, 3) == 1.0);
  CHECK(poisson_tail_bound(5.0, 60) < 1e-25);
  CHECK(p_lambda(3.0, 0.0).value == 0.0);
  double prev = 0.0;
  for (double f = 0.01; f <= 1.0 / 3.0; f += 0.02) {
    const auto v = p_lambda(5.0, f);
    CHECK(v.value >= prev);
    CHECK(v.error < 1e-12);
    prev = v.value;
  }
  for (double lambda : {0.0, 0.5, 1.0, 5.0, 30.0}) {
    const auto f1 = f1_lambda(lambda);
    CHECK(f1.upper() <= 1.0 / 3.0 + 1e-12);
    CHECK(2.0 * p_lambda_prime0(lambda).upper() <= 0.9999);
  }
  CHECK_THROWS(p_lambda(-1.0, 0.1));
}

TEST_CASE("recurrence stays below the geometric bound") {
  const auto tr = fixed_point_trace(5.0, 40);
  REQUIRE(tr.f.size() == 40);
  for (std::size_t t = 1; t <= 40; ++t) {
    CHECK(tr.f[t - 1] <= tr.f_upper[t - 1]);
    CHECK(tr.f_upper[t - 1] <= std::pow(0.9999, double(t - 1)) / 3.0);
  }
}

TEST_CASE("nonpositivity certificate") {
  const RationalPolynomial neg({Rational(-1), Rational(1), Rational(-1)});  // -1 + f - f^2
  const auto c = certify_nonpositive(neg, Rational(1));
  CHECK(c.certified);
  CHECK(c.max_value < 0);
  const RationalPolynomial pos({Rational(-1, 2), Rational(1)});  // f - 1/2
  CHECK_FALSE(certify_nonpositive(pos, Rational(1)).certified);
  // Tight: -(f - 1/2)^2 - 1/10^6
  RationalPolynomial tight = RationalPolynomial({Rational(-1, 2), Rational(1)}).pow(2) * Rational(-1);
  tight += RationalPolynomial::constant(Rational(-1, 1000000));
  CHECK(certify_nonpositive(tight, Rational(1)).certified);
}

TEST_CASE("lemma reports") {
  CHECK(verify_lemma_a().pass);
  CHECK(verify_q_concavity().pass);
  CHECK(verify_q_oracle().pass);
  PSlopeOptions coarse;
  coarse.lambda_step = 0.5;
  coarse.f_step = 0.01;
  CHECK(verify_p_slope(coarse).pass);
}

TEST_CASE("poisson mixture endpoints") {
  CHECK(poisson_mix_value(0.0) == doctest::Approx(0.99));
  CHECK(std::fabs(poisson_mix_value(1e6) - 0.99) <= 1e-6);
  const auto r = verify_poisson_mix();
  for (const auto& it : r.items) MESSAGE(it.name << " value " << it.value << " pass " << it.pass);
  // The supremum exceeds 0.999 (it stays below 0.9999).
  CHECK_FALSE(r.pass);
}

TEST_CASE("overlap exponent identities") {
  CHECK(std::fabs(f_alpha(0.5)) < 1e-12);
  for (double x : {0.1, 0.4, 0.7, 1.2, 1.5}) {
    CHECK(g_x(x) == doctest::Approx(f_alpha(std::sin(x) * std::sin(x))).epsilon(1e-10));
    CHECK(std::fabs(g_x(x) - g_x(std::numbers::pi / 2 - x)) < 1e-12);
  }
  for (double a : {0.05, 0.2, 0.45, 0.55, 0.9}) CHECK(f_alpha(a) < 0.0);
  CHECK_THROWS(f_alpha(0.0));
  GMeshOptions coarse;
  coarse.step = 1e-3;
  const auto rep = verify_g_mesh(coarse);
  const ReportItem* sym = find_item(rep, "g(x) = g(pi/2");
  REQUIRE(sym != nullptr);
  CHECK(sym->pass);
}

TEST_CASE("overlap probabilities") {
  const auto h = overlap_probs(0.5);
  CHECK(h.p_same == doctest::Approx(0.25));
  CHECK(h.p_diff == doctest::Approx(0.25));
  for (double a : {0.1, 0.3, 0.7}) {
    const auto o = overlap_probs(a);
    CHECK(o.p_same + o.p_diff == doctest::Approx(0.5));
  }
  CHECK(overlap_probs(0.7).p_same > overlap_probs(0.3).p_same);
  CHECK_THROWS(overlap_probs(1.0));
}

TEST_CASE("exact finite-n overlap agrees with simulation") {
  const std::size_t n = 4000;
  const double p = 20.0 / n;
  for (double a : {0.3, 0.5}) {
    const auto ex = exact_overlap(n, p, a);
    const auto mc = mc_overlap(n, p, a, 10, Seed{5});
    CAPTURE(a);
    CHECK(std::fabs(mc.p_same_hat - ex.joint.p_same) < 5 * mc.se_same + 1e-9);
    CHECK(std::fabs(mc.p_diff_hat - ex.joint.p_diff) < 5 * mc.se_diff + 1e-9);
    CHECK(std::fabs(mc.single_hat - ex.single) < 5 * mc.se_single + 1e-9);
    CHECK(mc.samples_same + mc.samples_diff == 10 * n);
  }
}

}
