#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "majcol/numerics/rational_polynomial.hpp"
#include "majcol/numerics/report.hpp"

namespace majcol::numerics {

/// Bounds on a_d and b_d, the b ratio identities, and 2Q_d'(0) for odd d <= 27.
VerificationReport verify_lemma_a();

/// Result of certifying p < 0 on [0, hi]. The interval is cut into dyadic
/// pieces [a, a+w]; a piece is closed once the Taylor expansion at a, with
/// negative higher terms dropped, is negative at w.
struct NonpositiveCertificate {
  bool certified = false;
  /// Pieces examined.
  std::size_t mesh_points = 0;
  /// Largest value seen at a piece end.
  Rational max_value;
  /// Global bound sum |c_k(p')| hi^k, for reference.
  Rational lipschitz;
  Rational argmax;
};
NonpositiveCertificate certify_nonpositive(const RationalPolynomial& p, const Rational& hi,
                                           std::size_t max_points = std::size_t{1} << 16);

/// Q_d'' <= 0 on [0, 1/3] for odd 3 <= d <= 27.
VerificationReport verify_q_concavity();

struct PSlopeOptions {
  double lambda_step = 0.01;
  double lambda_max = 30.0;
  double f_step = 1e-3;
  /// Extra lambdas where only the slope at 0 is checked.
  std::vector<double> extra_lambdas{1.0, 10.0, 100.0, 1000.0};
};
/// 2 P_lambda(f) <= 2 P_lambda'(0) f <= 0.9999 f over a (lambda, f) grid.
VerificationReport verify_p_slope(const PSlopeOptions& opts = {});

/// The weighted Poisson bound with 0.99, 2240/2187 and 19712/19683 weights.
VerificationReport verify_poisson_mix();
/// h(lambda) for the Poisson mixture, in double precision.
double poisson_mix_value(double lambda);

/// q_poly against the enumeration oracle and the closed-form slope at 0.
VerificationReport verify_q_oracle(std::size_t max_oracle_d = 7, std::size_t max_slope_d = 40);

}  // namespace majcol::numerics
