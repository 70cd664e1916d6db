#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "majcol/random.hpp"

namespace majcol {

struct GwRootEstimate {
  std::size_t t = 0;
  std::uint64_t samples = 0;
  std::uint64_t nonmajority = 0;

  double frequency() const;
  /// Binomial standard error of frequency().
  double sigma() const;
};

/// Estimates Pr[root of a Poisson(lambda) GW tree of depth t is not
/// majority-coloured at time t] under the personality-changing process, for
/// each requested t.
///
/// Trees of depth 20 with lambda = 20 are far too large to build explicitly,
/// so this works level by level: a level-j pool holds `pool_size` colour
/// trajectories (times 1..j+1) of vertices with j generations below them, and
/// each level-j vertex draws its Poisson(lambda) children from the level-(j-1)
/// pool. The vertex update is the same one run_recolouring uses.
std::vector<GwRootEstimate> gw_root_nonmajority(double lambda, std::span<const std::size_t> times,
                                                std::size_t pool_size, Seed seed);

/// Reference estimate from explicit gen_gw_tree samples + run_recolouring.
/// Only practical for small lambda * t.
GwRootEstimate gw_root_nonmajority_explicit(double lambda, std::size_t t, std::size_t samples,
                                            Seed seed);

}  // namespace majcol
