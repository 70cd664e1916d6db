#include "majcol/numerics/calculus.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace majcol::numerics {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}
}  // namespace

double f_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  const double b = 1.0 - alpha;
  return alpha * (std::log(std::atan(std::sqrt(alpha / b))) - std::log(alpha)) +
         b * (std::log(std::atan(std::sqrt(b / alpha))) - std::log(b)) + std::log(1.0 / kHalfPi);
}

double g_x(double x) {
  if (!(x > 0.0 && x < kHalfPi)) throw std::invalid_argument("x must lie in (0,pi/2)");
  const double s2 = std::sin(x) * std::sin(x), c2 = std::cos(x) * std::cos(x);
  return s2 * std::log(x) - s2 * std::log(s2) + c2 * std::log(kHalfPi - x) - c2 * std::log(c2) -
         std::log(kHalfPi);
}

VerificationReport verify_g_mesh(const GMeshOptions& opts) {
  VerificationReport rep;
  rep.lemma = "g-mesh";
  rep.param("step", fmt(opts.step));
  rep.param("gap", fmt(opts.gap));
  const double quarter = std::numbers::pi / 4.0;
  const auto n = static_cast<long>(std::floor(kHalfPi / opts.step));

  double mesh_max = -INFINITY, mesh_arg = 0.0;
  double mid_max = -INFINITY, mid_arg = 0.0;
  double sym_err = 0.0;
  long mesh_points = 0;
  for (long i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) * opts.step;
    if (x >= kHalfPi) break;
    const double v = g_x(x);
    const bool outer = (x > opts.gap && x < quarter - opts.gap) ||
                       (x > quarter + opts.gap && x < kHalfPi - opts.gap);
    if (outer) {
      ++mesh_points;
      if (v > mesh_max) { mesh_max = v; mesh_arg = x; }
    }
    if (x >= quarter - opts.gap && x <= quarter + opts.gap && v > mid_max) {
      mid_max = v;
      mid_arg = x;
    }
    sym_err = std::max(sym_err, std::fabs(v - g_x(kHalfPi - x)));
  }
  rep.add({"max g on outer mesh <= -0.02", mesh_max, opts.max_bound, opts.max_bound - mesh_max,
           mesh_max <= opts.max_bound,
           "at x=" + fmt(mesh_arg) + " over " + std::to_string(mesh_points) + " points"});

  bool small_ok = true;
  double small_worst = -INFINITY, small_arg = 0.0;
  for (int i = 1; static_cast<double>(i) * opts.small_step <= opts.gap + 1e-12; ++i) {
    const double x = static_cast<double>(i) * opts.small_step;
    const double slack = g_x(x) + 0.1 * x;
    if (slack > 0) small_ok = false;
    if (slack > small_worst) { small_worst = slack; small_arg = x; }
  }
  rep.add({"g(x) <= -0.1 x on (0, 0.1]", small_worst, 0.0, -small_worst, small_ok,
           "worst at x=" + fmt(small_arg)});

  rep.add({"g <= 0 near pi/4", mid_max, 0.0, -mid_max, mid_max <= opts.tolerance,
           "at x=" + fmt(mid_arg)});
  rep.add({"g(x) = g(pi/2 - x)", sym_err, 1e-12, 1e-12 - sym_err, sym_err <= 1e-12, ""});

  double sub_err = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double x = kHalfPi * i / 1000.0, s = std::sin(x);
    sub_err = std::max(sub_err, std::fabs(f_alpha(s * s) - g_x(x)));
  }
  rep.add({"f(sin^2 x) = g(x)", sub_err, 1e-12, 1e-12 - sub_err, sub_err <= 1e-12, ""});

  const double at_half = f_alpha(0.5);
  rep.add({"f(1/2) = 0", at_half, 0.0, 1e-12 - std::fabs(at_half), std::fabs(at_half) <= 1e-12, ""});
  bool f_ok = true;
  double f_worst = -INFINITY, f_arg = 0.0;
  for (int i = 1; i <= 999; ++i) {
    if (i == 500) continue;
    const double a = i / 1000.0, v = f_alpha(a);
    if (!(v < 0.0)) f_ok = false;
    if (v > f_worst) { f_worst = v; f_arg = a; }
  }
  rep.add({"f(alpha) < 0 for alpha in {0.001..0.999} \\ {1/2}", f_worst, 0.0, -f_worst, f_ok,
           "max at alpha=" + fmt(f_arg)});
  return rep;
}

}  // namespace majcol::numerics
