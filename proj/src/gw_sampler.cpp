#include "majcol/gw_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "majcol/generators.hpp"
#include "majcol/recolour.hpp"

namespace majcol {

double GwRootEstimate::frequency() const {
  return samples == 0 ? 0.0 : static_cast<double>(nonmajority) / static_cast<double>(samples);
}

double GwRootEstimate::sigma() const {
  if (samples == 0) return 0.0;
  const double q = frequency();
  return std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
}

std::vector<GwRootEstimate> gw_root_nonmajority(double lambda, std::span<const std::size_t> times,
                                                std::size_t pool_size, Seed seed) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  if (pool_size == 0) throw std::invalid_argument("pool_size must be positive");
  std::vector<GwRootEstimate> out;
  std::size_t max_t = 0;
  for (std::size_t t : times) {
    if (t == 0) throw std::invalid_argument("times must be >= 1");
    max_t = std::max(max_t, t);
    out.push_back({t, pool_size, 0});
  }

  // Level 0: leaves, colour fixed at its initial value; trajectory length 1.
  std::vector<Colour> prev(pool_size), cur;
  for (std::size_t i = 0; i < pool_size; ++i) {
    Rng rng = Rng::keyed(seed, 0, i);
    prev[i] = initial_memory(rng).colour;
  }

  std::vector<std::uint32_t> kids;
  std::vector<ColourCounts> counts;
  for (std::size_t level = 1; level <= max_t; ++level) {
    const std::size_t child_len = level;  // child trajectories: times 1..level
    const std::size_t len = level + 1;
    cur.assign(pool_size * len, Colour::One);
    std::uint64_t nonmaj = 0;
    for (std::size_t i = 0; i < pool_size; ++i) {
      Rng rng = Rng::keyed(seed, level, i);
      VertexMemory m = initial_memory(rng);
      const std::uint64_t deg = rng.poisson(lambda);
      kids.resize(deg);
      for (auto& k : kids) k = static_cast<std::uint32_t>(rng.below(pool_size));
      // counts[s] = out-neighbour tally at time s+1
      counts.assign(child_len, ColourCounts{});
      for (auto k : kids) {
        const Colour* traj = prev.data() + static_cast<std::size_t>(k) * child_len;
        for (std::size_t s = 0; s < child_len; ++s) ++counts[s][index_of(traj[s])];
      }
      Colour* mine = cur.data() + i * len;
      mine[0] = m.colour;
      for (std::size_t s = 1; s <= child_len; ++s) {
        if (deg > 0) {
          if (s == 1) {
            if (more_than_half(counts[0][index_of(m.colour)], deg)) initial_flush(m, rng);
          } else if (auto g = overtake_from_counts(counts[s - 2], counts[s - 1], deg)) {
            react_to_overtake(m, *g, rng);
          }
        }
        mine[s] = m.colour;
      }
      // status at time `level`: own colour mine[level-1], children at counts[level-1]
      if (more_than_half(counts[level - 1][index_of(mine[level - 1])], deg)) ++nonmaj;
    }
    for (auto& e : out)
      if (e.t == level) e.nonmajority = nonmaj;
    prev.swap(cur);
  }
  return out;
}

GwRootEstimate gw_root_nonmajority_explicit(double lambda, std::size_t t, std::size_t samples,
                                            Seed seed) {
  GwRootEstimate est{t, samples, 0};
  for (std::size_t i = 0; i < samples; ++i) {
    const Seed s = derive_seed(seed, i);
    const auto tree = gen_gw_tree(lambda, t, std::size_t{1} << 26, s);
    const auto run = run_recolouring(tree.tree, RecolourMode::PersonalityChanging, t - 1, s);
    if (!vertex_majority_status(tree.tree, run.final_colours, tree.root).is_majority)
      ++est.nonmajority;
  }
  return est;
}

}  // namespace majcol
