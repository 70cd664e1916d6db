#include "majcol/numerics/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "majcol/numerics/overtake.hpp"
#include "majcol/numerics/poisson_mixture.hpp"

namespace majcol::numerics {

namespace {

std::string str(const Rational& q) { return q.get_str(); }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

ReportItem exact_le(std::string name, const Rational& value, const Rational& bound, bool strict) {
  ReportItem it;
  it.name = std::move(name);
  it.value = value.get_d();
  it.bound = bound.get_d();
  it.margin = Rational(bound - value).get_d();
  it.pass = strict ? value < bound : value <= bound;
  it.detail = str(value);
  return it;
}

}  // namespace

VerificationReport verify_lemma_a() {
  VerificationReport rep;
  rep.lemma = "lemma-a";
  const Rational limit(49, 50);
  std::vector<std::size_t> ds;
  for (std::size_t d = 0; d <= 22; d += 2) ds.push_back(d);
  ds.push_back(1);
  ds.push_back(29);
  ds.push_back(31);
  for (std::size_t d : ds)
    rep.add(exact_le("2a_" + std::to_string(d) + " < 0.98", a_coeff(d) * 2, limit, true));

  const Rational b_limit(19, 20);
  rep.add(exact_le("b_24 <= 0.95", b_coeff(24), b_limit, false));
  rep.add(exact_le("b_33 <= 0.95", b_coeff(33), b_limit, false));

  // Ratio identities and the monotonicity they imply.
  bool even_ok = true, odd_ok = true, chain_ok = true, grow_ok = true;
  std::string first_bad;
  for (std::size_t d = 1; d <= 60; ++d) {
    const Rational ratio = b_coeff(d) / b_coeff(d + 2);
    const Rational expect = d % 2 == 0 ? Rational(9, 8) * Rational(d, d + 1)
                                       : Rational(9, 8) * Rational(d + 1, d + 2);
    if (ratio != expect) {
      (d % 2 == 0 ? even_ok : odd_ok) = false;
      if (first_bad.empty()) first_bad = "d=" + std::to_string(d);
    }
    if ((d % 2 == 0 && d >= 24) || (d % 2 == 1 && d >= 33))
      if (!(expect > 1)) grow_ok = false;
    if (a_coeff(d) * 2 > b_coeff(d)) chain_ok = false;
  }
  rep.add({"b_d/b_{d+2} = (9/8) d/(d+1) for even d <= 60", 0, 0, 0, even_ok, first_bad});
  rep.add({"b_d/b_{d+2} = (9/8) (d+1)/(d+2) for odd d <= 60", 0, 0, 0, odd_ok, first_bad});
  rep.add({"ratio > 1 for even d >= 24 and odd d >= 33 (d <= 60)", 0, 0, 0, grow_ok, ""});
  rep.add({"2a_d <= b_d for 1 <= d <= 60", 0, 0, 0, chain_ok, ""});

  // Slopes at 0 for the small odd degrees.
  const Rational slope_limit(99, 100);
  for (std::size_t d = 1; d <= 27; d += 2) {
    const Rational s = q_prime0(d) * 2;
    if (d == 7 || d == 9 || d == 11) {
      const Rational expect = d == 11 ? Rational(19712, 19683) : Rational(2240, 2187);
      ReportItem it;
      it.name = "2Q_" + std::to_string(d) + "'(0) = " + str(expect);
      it.value = s.get_d();
      it.bound = expect.get_d();
      it.pass = s == expect;
      it.detail = str(s);
      rep.add(it);
    } else {
      rep.add(exact_le("2Q_" + std::to_string(d) + "'(0) <= 0.99", s, slope_limit, false));
    }
  }
  return rep;
}

namespace {
// Coefficients of p(a + y) in y.
std::vector<Rational> taylor_shift(std::vector<Rational> c, const Rational& a) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  return c;
}
}  // namespace

NonpositiveCertificate certify_nonpositive(const RationalPolynomial& p, const Rational& hi,
                                           std::size_t max_points) {
  NonpositiveCertificate cert;
  cert.lipschitz = p.derivative().abs_bound(hi);
  cert.max_value = p.evaluate(hi);
  cert.argmax = hi;
  struct Piece {
    Rational a, w;
  };
  std::vector<Piece> todo{{Rational(0), hi}};
  while (!todo.empty()) {
    if (cert.mesh_points >= max_points) return cert;
    const Piece piece = todo.back();
    todo.pop_back();
    ++cert.mesh_points;
    const auto e = taylor_shift(p.coeffs(), piece.a);
    if (e.empty()) continue;
    if (e[0] > cert.max_value) {
      cert.max_value = e[0];
      cert.argmax = piece.a;
    }
    if (e[0] >= 0) return cert;
    // p(a + y) <= e_0 + sum_{k>=1} max(e_k, 0) w^k on [0, w]
    Rational bound = e[0], wk = 1;
    for (std::size_t k = 1; k < e.size(); ++k) {
      wk *= piece.w;
      if (e[k] > 0) bound += e[k] * wk;
    }
    if (bound < 0) continue;
    const Rational half = piece.w / 2;
    todo.push_back({piece.a + half, half});
    todo.push_back({piece.a, half});
  }
  cert.certified = cert.max_value < 0;
  return cert;
}

VerificationReport verify_q_concavity() {
  VerificationReport rep;
  rep.lemma = "q-concavity";
  rep.param("interval", "[0,1/3]");
  rep.param("method", "dyadic pieces, Taylor bound at each left end");
  const Rational third(1, 3);
  for (std::size_t d = 3; d <= 27; d += 2) {
    const auto q2 = q_poly(d).derivative().derivative();
    rep.add(exact_le("Q_" + std::to_string(d) + "''(0) <= 0", q2.evaluate(Rational(0)), Rational(0),
                     false));
    const auto cert = certify_nonpositive(q2, third);
    ReportItem it;
    it.name = "Q_" + std::to_string(d) + "'' <= 0 on [0,1/3]";
    it.value = cert.max_value.get_d();
    it.bound = 0.0;
    it.margin = -cert.max_value.get_d();
    it.pass = cert.certified;
    it.detail = "pieces=" + std::to_string(cert.mesh_points) + " L=" + fmt(cert.lipschitz.get_d()) +
                " argmax=" + fmt(cert.argmax.get_d());
    rep.add(it);
  }
  return rep;
}

VerificationReport verify_p_slope(const PSlopeOptions& opts) {
  VerificationReport rep;
  rep.lemma = "p-slope";
  rep.param("lambda_grid", "[0," + fmt(opts.lambda_max) + "] step " + fmt(opts.lambda_step));
  rep.param("f_grid", "(0,1/3] step " + fmt(opts.f_step));
  const double slope_limit = 0.9999;
  const auto n_lambda = static_cast<std::size_t>(std::llround(opts.lambda_max / opts.lambda_step));
  std::vector<double> fs;
  for (std::size_t j = 1;; ++j) {
    const double f = static_cast<double>(j) * opts.f_step;
    if (f > 1.0 / 3.0) break;
    fs.push_back(f);
  }
  const std::size_t dmax = poisson_truncation(opts.lambda_max);
  std::vector<std::vector<double>> qtab;
  qtab.reserve(fs.size());
  for (double f : fs) qtab.push_back(q_values_upto(dmax, f));
  std::vector<double> qp(dmax + 1);
  for (std::size_t d = 0; d <= dmax; ++d) qp[d] = q_prime0_double(d);

  double worst_slope = 0.0, worst_slope_lambda = 0.0;
  double worst_chord = INFINITY, worst_chord_lambda = 0.0, worst_chord_f = 0.0;
  bool chord_ok = true;
  std::size_t checked = 0;
  for (std::size_t i = 0; i <= n_lambda; ++i) {
    const double lambda = static_cast<double>(i) * opts.lambda_step;
    const std::size_t D = poisson_truncation(lambda);
    const auto w = poisson_weights(lambda, D);
    const double tail = poisson_tail_bound(lambda, D + 1);
    double slope = 0.0;
    for (std::size_t d = 1; d <= D; ++d) slope += w[d] * qp[d];
    const double slope_up = slope + tail + 1e-12 * slope;
    const double slope_low = slope * (1.0 - 1e-12);
    if (2.0 * slope_up > worst_slope) {
      worst_slope = 2.0 * slope_up;
      worst_slope_lambda = lambda;
    }
    for (std::size_t j = 0; j < fs.size(); ++j) {
      double P = 0.0;
      for (std::size_t d = 1; d <= D; ++d) P += w[d] * qtab[j][d];
      const double P_up = P + tail + 1e-12 * P;
      const double slack = slope_low * fs[j] - P_up;
      ++checked;
      if (slack < 0) chord_ok = false;
      const double rel = slack / fs[j];
      if (lambda > 0.0 && rel < worst_chord) {
        worst_chord = rel;
        worst_chord_lambda = lambda;
        worst_chord_f = fs[j];
      }
    }
  }
  rep.add({"max 2P'_lambda(0) over grid <= 0.9999", worst_slope, slope_limit,
           slope_limit - worst_slope, worst_slope <= slope_limit,
           "at lambda=" + fmt(worst_slope_lambda)});
  rep.add({"worst slope margin <= 0.17", slope_limit - worst_slope, 0.17,
           0.17 - (slope_limit - worst_slope), slope_limit - worst_slope <= 0.17, ""});
  rep.add({"P_lambda(f) <= P'_lambda(0) f on grid", worst_chord, 0.0, worst_chord, chord_ok,
           "min (P'(0) f - P(f)) / f at lambda=" + fmt(worst_chord_lambda) +
               " f=" + fmt(worst_chord_f) + " over " + std::to_string(checked) + " points"});
  for (double lambda : opts.extra_lambdas) {
    const auto s = p_lambda_prime0(lambda);
    const double v = 2.0 * s.upper();
    rep.add({"2P'_" + fmt(lambda) + "(0) <= 0.9999", v, slope_limit, slope_limit - v,
             v <= slope_limit, ""});
  }
  return rep;
}

namespace {
struct MixWeights {
  Rational a7, a9, a11;
};
MixWeights mix_weights() {
  const Rational base(99, 100);
  return {Rational(2240, 2187) - base, Rational(2240, 2187) - base, Rational(19712, 19683) - base};
}
}  // namespace

double poisson_mix_value(double lambda) {
  const auto w = mix_weights();
  return 0.99 + w.a7.get_d() * poisson_pmf(lambda, 7) + w.a9.get_d() * poisson_pmf(lambda, 9) +
         w.a11.get_d() * poisson_pmf(lambda, 11);
}

VerificationReport verify_poisson_mix() {
  VerificationReport rep;
  rep.lemma = "poisson-mix";
  const double bound = 0.999;
  const auto w = mix_weights();
  // d/dlambda Pr[Z=k] = Pr[Z=k-1] - Pr[Z=k], bounded by 1 in absolute value.
  const double lip = Rational(abs(w.a7) + abs(w.a9) + abs(w.a11)).get_d();
  const double step = 1e-4, hi = 60.0;
  rep.param("mesh", "[0,60] step 1e-4");
  rep.param("lipschitz", fmt(lip));

  // p(lambda) with h = 0.99 + e^{-lambda} p(lambda); critical points solve p' = p.
  auto fact = [](unsigned k) {
    Integer r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
  };
  RationalPolynomial p = RationalPolynomial::monomial(w.a7 / Rational(fact(7)), 7) +
                         RationalPolynomial::monomial(w.a9 / Rational(fact(9)), 9) +
                         RationalPolynomial::monomial(w.a11 / Rational(fact(11)), 11);
  const RationalPolynomial crit = p.derivative() - p;

  double best = poisson_mix_value(0.0), best_x = 0.0;
  std::vector<double> roots;
  double prev_sign = crit.evaluate(step / 2);
  const auto n = static_cast<std::size_t>(hi / step);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) * step;
    const double v = poisson_mix_value(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
    const double s = crit.evaluate(x);
    if ((s > 0) != (prev_sign > 0) && s != 0.0) roots.push_back(x);
    prev_sign = s;
  }
  // Golden-section refinement around the mesh maximum.
  double a = std::max(0.0, best_x - step), b = best_x + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 80; ++it) {
    const double c = b - g * (b - a), d = a + g * (b - a);
    if (poisson_mix_value(c) > poisson_mix_value(d)) b = d; else a = c;
  }
  const double refined_x = (a + b) / 2.0;
  const double refined = std::max(best, poisson_mix_value(refined_x));
  const double mesh_bound = best + lip * step / 2.0 + 1e-15;
  // For lambda > 60 > 11 every Pr[Z=k], k <= 11, is below its value at 60.
  const double tail_bound = 0.99 + lip * poisson_pmf(60.0, 11);
  const double upper = std::max(mesh_bound, tail_bound);

  rep.param("sup below 0.9999", upper < 0.9999 ? "yes" : "no");
  std::string crit_list;
  for (double r : roots) crit_list += fmt(r) + " ";
  rep.add({"h(0) = 0.99", poisson_mix_value(0.0), 0.99, 0.0,
           std::fabs(poisson_mix_value(0.0) - 0.99) < 1e-15, ""});
  const double far = poisson_mix_value(1e6);
  rep.add({"|h(1e6) - 0.99| <= 1e-6", far, 0.99, 1e-6 - std::fabs(far - 0.99),
           std::fabs(far - 0.99) <= 1e-6, ""});
  rep.add({"sup h(lambda) < 0.999", upper, bound, bound - upper, upper < bound,
           "max h=" + fmt(refined) + " at lambda=" + fmt(refined_x) +
               "; critical points near " + crit_list});
  return rep;
}

VerificationReport verify_q_oracle(std::size_t max_oracle_d, std::size_t max_slope_d) {
  VerificationReport rep;
  rep.lemma = "q-oracle";
  for (std::size_t d = 0; d <= max_oracle_d; ++d) {
    const auto a = q_poly(d), b = q_oracle_poly(d);
    rep.add({"q_poly(" + std::to_string(d) + ") == enumeration", 0, 0, 0, a == b, a.to_string()});
  }
  for (std::size_t d = 0; d <= max_slope_d; ++d) {
    const Rational s = q_poly(d).coeff(1), e = q_prime0(d);
    rep.add({"Q_" + std::to_string(d) + "'(0) == closed form", s.get_d(), e.get_d(), 0.0, s == e,
             s.get_str()});
  }
  return rep;
}

}  // namespace majcol::numerics
