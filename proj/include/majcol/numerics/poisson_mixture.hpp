#pragma once

#include <cstddef>
#include <vector>

namespace majcol::numerics {

/// A computed value together with a bound on |true - value|.
struct Certified {
  double value = 0.0;
  double error = 0.0;
  double upper() const { return value + error; }
  double lower() const { return value - error; }
};

double poisson_pmf(double lambda, std::size_t k);
/// Poisson weights for k = 0..kmax.
std::vector<double> poisson_weights(double lambda, std::size_t kmax);
/// Truncation point max(50, ceil(lambda + 20 sqrt(lambda) + 20)).
std::size_t poisson_truncation(double lambda);
/// Chernoff bound on Pr[Z >= k] for Z ~ Poisson(lambda), k > lambda.
double poisson_tail_bound(double lambda, std::size_t k);

/// P_lambda(f) = sum_d Pr[Z = d] Q_d(f).
Certified p_lambda(double lambda, double f, double tol = 1e-14);
/// P_lambda'(0) = sum_d Pr[Z = d] Q_d'(0).
Certified p_lambda_prime0(double lambda);
/// Pr[root of a Poisson(lambda) tree is not majority-coloured at time 1].
Certified f1_lambda(double lambda);

struct RecurrenceTrace {
  double lambda = 0.0;
  /// f[t-1] = f_t, t = 1..T (computed values).
  std::vector<double> f;
  /// Certified upper bounds for each f_t.
  std::vector<double> f_upper;
};

/// f_1 = f1_lambda, f_t = 2 P_lambda(f_{t-1}).
RecurrenceTrace fixed_point_trace(double lambda, std::size_t T);

}  // namespace majcol::numerics
