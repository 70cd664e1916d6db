#include "majcol/numerics/poisson_mixture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "majcol/numerics/overtake.hpp"

namespace majcol::numerics {

namespace {
// Relative rounding allowance for sums of O(10^3) positive double terms.
constexpr double kRoundRel = 1e-12;
}  // namespace

double poisson_pmf(double lambda, std::size_t k) {
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kk = static_cast<double>(k);
  return std::exp(-lambda + kk * std::log(lambda) - std::lgamma(kk + 1.0));
}

std::vector<double> poisson_weights(double lambda, std::size_t kmax) {
  std::vector<double> w(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) w[k] = poisson_pmf(lambda, k);
  return w;
}

std::size_t poisson_truncation(double lambda) {
  const double d = std::ceil(lambda + 20.0 * std::sqrt(lambda) + 20.0);
  return std::max<std::size_t>(50, static_cast<std::size_t>(d));
}

double poisson_tail_bound(double lambda, std::size_t k) {
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kk = static_cast<double>(k);
  if (kk <= lambda) return 1.0;
  return std::min(1.0, std::exp(-lambda + kk * (1.0 + std::log(lambda) - std::log(kk))));
}

Certified p_lambda(double lambda, double f, double tol) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  std::size_t D = poisson_truncation(lambda);
  while (poisson_tail_bound(lambda, D + 1) > tol) D += 10;
  const auto q = q_values_upto(D, f);
  const auto w = poisson_weights(lambda, D);
  Certified c;
  for (std::size_t d = 0; d <= D; ++d) c.value += w[d] * q[d];
  c.error = poisson_tail_bound(lambda, D + 1) + kRoundRel * c.value;
  return c;
}

Certified p_lambda_prime0(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  const std::size_t D = poisson_truncation(lambda);
  Certified c;
  for (std::size_t d = 1; d <= D; ++d) c.value += poisson_pmf(lambda, d) * q_prime0_double(d);
  // q'_d(0) <= 1 for every d
  c.error = poisson_tail_bound(lambda, D + 1) + kRoundRel * c.value;
  return c;
}

Certified f1_lambda(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  const std::size_t D = poisson_truncation(lambda);
  Certified c;
  for (std::size_t d = 1; d <= D; ++d) c.value += poisson_pmf(lambda, d) * nonmajority_prob_double(d);
  c.error = poisson_tail_bound(lambda, D + 1) + kRoundRel * c.value;
  return c;
}

RecurrenceTrace fixed_point_trace(double lambda, std::size_t T) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  RecurrenceTrace tr;
  tr.lambda = lambda;
  const auto f1 = f1_lambda(lambda);
  tr.f.push_back(f1.value);
  tr.f_upper.push_back(f1.upper());
  for (std::size_t t = 2; t <= T; ++t) {
    tr.f.push_back(2.0 * p_lambda(lambda, tr.f.back(), 1e-14).value);
    // P_lambda is nondecreasing in f, so iterating on upper bounds stays above.
    const double prev_up = std::min(1.0, tr.f_upper.back());
    tr.f_upper.push_back(2.0 * p_lambda(lambda, prev_up, 1e-14).upper());
  }
  return tr;
}

}  // namespace majcol::numerics
