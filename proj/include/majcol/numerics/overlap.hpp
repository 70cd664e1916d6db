#pragma once

#include <cstddef>
#include <cstdint>

#include "majcol/random.hpp"

namespace majcol::numerics {

struct OverlapProbs {
  /// Pr[both events] for a vertex where the two bisections agree.
  double p_same = 0.0;
  /// Same for a vertex where they disagree.
  double p_diff = 0.0;
};

/// Limiting joint probabilities (1/pi) arctan(sqrt(alpha/(1-alpha))) and its mirror.
OverlapProbs overlap_probs(double alpha);

/// Exact joint probabilities on D(n, p) for the fixed bisections used by
/// mc_overlap, from the binomial counts of out-neighbours in the four classes.
struct ExactOverlap {
  OverlapProbs joint;
  /// Pr[a vertex is majority-coloured under one bisection].
  double single = 0.0;
};
ExactOverlap exact_overlap(std::size_t n, double p, double alpha);

struct OverlapEstimate {
  double p_same_hat = 0.0;
  double p_diff_hat = 0.0;
  double single_hat = 0.0;
  double se_same = 0.0;
  double se_diff = 0.0;
  double se_single = 0.0;
  std::uint64_t samples_same = 0;
  std::uint64_t samples_diff = 0;
  /// Agreement fraction actually used, 2 round(alpha n / 2) / n.
  double alpha_used = 0.0;
};

/// Monte Carlo frequencies of E_v and E'_v on fresh D(n, p) samples, where E_v
/// says v has at most as many out-neighbours on its own side as on the other.
OverlapEstimate mc_overlap(std::size_t n, double p, double alpha, std::size_t trials, Seed seed);

}  // namespace majcol::numerics
