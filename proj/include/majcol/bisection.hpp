#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "majcol/graph.hpp"
#include "majcol/random.hpp"
#include "majcol/types.hpp"

namespace majcol {

enum class BisectMode { Internal, External };
const char* to_string(BisectMode m);

/// Internal: at least as many neighbours on v's side as opposite.
/// External: at least as many opposite as on v's side.
bool internal_status(const Graph& g, const Partition2& part, Vertex v, BisectMode mode);

std::size_t count_nonconforming(const Graph& g, const Partition2& part, BisectMode mode);
std::size_t cut_size(const Graph& g, const Partition2& part);
bool is_bisection(const Partition2& part);

/// Per-vertex Bernoulli(p) sequences of length K, generated on demand from
/// (seed, v, round) so that only queried entries cost anything.
class FlipSchedule {
 public:
  FlipSchedule(Seed seed, double p, std::uint64_t rounds) : seed_(seed), p_(p), rounds_(rounds) {}
  /// s(v)_round, round in [1, K].
  bool entry(Vertex v, std::uint64_t round) const;
  double p() const { return p_; }
  std::uint64_t rounds() const { return rounds_; }

 private:
  Seed seed_;
  double p_;
  std::uint64_t rounds_;
};

struct FlipRecord {
  std::uint64_t i = 0;
  std::size_t z = 0;
  std::size_t x = 0;
  std::size_t size1 = 0;
  std::size_t size2 = 0;

  friend bool operator==(const FlipRecord&, const FlipRecord&) = default;
};

struct BatchFlipResult {
  Partition2 best;
  std::uint64_t best_round = 0;
  /// Visited state with the fewest non-conforming vertices, ignoring balance.
  Partition2 lowest;
  std::uint64_t lowest_round = 0;
  /// Best state respects the imbalance bound eps*n/d.
  bool feasible = false;
  std::vector<FlipRecord> trace;
  std::uint64_t rounds_planned = 0;
  std::uint64_t rounds_run = 0;
  bool capped = false;
};

inline constexpr std::uint64_t kMaxFlipRounds = 1'000'000;

/// Batch-flip process with p = 1/d and K = ceil(5 d^2 / eps) rounds (capped).
/// Throws std::invalid_argument if max degree exceeds d or eps is outside (0,1).
BatchFlipResult batch_flip_run(const Graph& g, BisectMode mode, std::size_t d, double eps, Seed seed);

/// Moves floor(imbalance/2) vertices off the larger side: its non-conforming
/// vertices first, then conforming ones by increasing degree (ties by id).
Partition2 balance_to_bisection(const Graph& g, const Partition2& part, BisectMode mode);

struct BisectionStats {
  BisectMode mode = BisectMode::Internal;
  double eps = 0.0;
  std::size_t d_used = 0;
  std::size_t trimmed = 0;
  std::uint64_t rounds_run = 0;
  std::size_t retries = 0;
  std::size_t nonconforming = 0;
  double final_fraction = 0.0;
  bool bisection = false;
  std::vector<std::string> warnings;
};

struct AlmostBisectionResult {
  Partition2 partition;
  BisectionStats stats;
  std::vector<FlipRecord> trace;
};

AlmostBisectionResult almost_bisection(const Graph& g, BisectMode mode, double eps, Seed seed,
                                       std::size_t max_retries = 5);

}  // namespace majcol
