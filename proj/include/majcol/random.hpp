#pragma once

#include <cstdint>
#include <limits>

namespace majcol {

/// Master seed. Every randomized operation is a pure function of its inputs
/// and one of these.
struct Seed {
  std::uint64_t value = 0;
  friend constexpr bool operator==(Seed, Seed) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent child seed from a parent seed and a tag.
Seed derive_seed(Seed parent, std::uint64_t tag);

/// xoshiro256** generator. All samplers below are written out explicitly so
/// that streams are identical across standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed);

  /// Substream keyed by (seed, a, b). Used for per-vertex, per-step draws.
  static Rng keyed(Seed seed, std::uint64_t a, std::uint64_t b = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform01();
  /// Uniform in (0, 1].
  double uniform_open0();
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p);
  /// Number of failures before the first success of a Bernoulli(p) sequence.
  /// Returns max() when p == 0.
  std::uint64_t geometric_skip(double p);
  /// Poisson(lambda): inversion for lambda < 10, PTRS transformed rejection
  /// otherwise.
  std::uint64_t poisson(double lambda);

 private:
  std::uint64_t s_[4];
};

}  // namespace majcol
