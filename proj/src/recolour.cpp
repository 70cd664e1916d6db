#include "majcol/recolour.hpp"

#include <stdexcept>

namespace majcol {

ColourCounts out_colour_counts(const Digraph& d, const Colouring3& c, Vertex v) {
  ColourCounts counts{};
  for (Vertex w : d.out(v)) ++counts[index_of(c[w])];
  return counts;
}

MajorityStatus vertex_majority_status(const Digraph& d, const Colouring3& c, Vertex v) {
  MajorityStatus s;
  s.counts = out_colour_counts(d, c, v);
  s.same_count = s.counts[index_of(c[v])];
  s.is_majority = !more_than_half(s.same_count, d.out_degree(v));
  return s;
}

std::optional<Colour> overtake_from_counts(const ColourCounts& before, const ColourCounts& after,
                                           std::uint64_t deg) {
  for (int i = 0; i < 3; ++i)
    if (!more_than_half(before[i], deg) && more_than_half(after[i], deg)) return colour_at(i);
  return std::nullopt;
}

std::optional<Colour> overtake_colour(const Digraph& d, const Colouring3& c_prev,
                                      const Colouring3& c_cur, Vertex v) {
  return overtake_from_counts(out_colour_counts(d, c_prev, v), out_colour_counts(d, c_cur, v),
                              d.out_degree(v));
}

Colour draw_other_colour(Colour excluded, Rng& rng) {
  const int shift = 1 + static_cast<int>(rng.below(2));
  return colour_at((index_of(excluded) + shift) % 3);
}

VertexMemory initial_memory(Rng& rng) {
  VertexMemory m;
  m.colour = colour_at(static_cast<int>(rng.below(3)));
  m.personality = rng.below(3) == 0 ? Personality::Paranoid : Personality::Thoughtful;
  return m;
}

void initial_flush(VertexMemory& m, Rng& rng) {
  m.last_excluded = m.colour;
  m.colour = draw_other_colour(m.colour, rng);
}

bool react_to_overtake(VertexMemory& m, Colour gamma, Rng& rng, PersonalityStats* stats) {
  if (m.personality == Personality::Paranoid) {
    m.colour = draw_other_colour(gamma, rng);
    m.last_excluded = gamma;
    m.personality = Personality::Thoughtful;
    if (stats) ++stats->paranoid_to_thoughtful;
    return true;
  }
  // heads probability (1/2 - p*) / (1 - p*): 1/4, 1/2 or 0
  bool heads = false;
  if (!m.last_excluded) {
    heads = rng.below(4) == 0;
    if (stats) ++stats->thoughtful_fresh;
  } else if (*m.last_excluded == gamma) {
    heads = rng.below(2) == 0;
    if (stats) ++stats->thoughtful_excluded_match;
  } else {
    if (stats) ++stats->thoughtful_other;
  }
  if (m.colour == gamma || heads) {
    m.colour = draw_other_colour(gamma, rng);
    m.last_excluded = gamma;
    if (stats) ++stats->thoughtful_to_thoughtful;
    return true;
  }
  m.personality = Personality::Paranoid;
  if (stats) ++stats->thoughtful_to_paranoid;
  return false;
}

namespace {

TraceRecord make_record(std::size_t t, const Digraph& d, const Colouring3& c,
                        const std::vector<ColourCounts>& counts, std::size_t changed) {
  TraceRecord r;
  r.t = t;
  r.changed = changed;
  for (Vertex v = 0; v < d.n(); ++v) {
    ++r.class_sizes[index_of(c[v])];
    if (more_than_half(counts[v][index_of(c[v])], d.out_degree(v))) ++r.nonmajority;
  }
  return r;
}

}  // namespace

RecolourResult run_recolouring_from(const Digraph& d, RecolourMode mode, std::size_t steps,
                                    Seed seed, const Colouring3& initial) {
  const std::size_t n = d.n();
  if (initial.size() != n) throw std::invalid_argument("initial colouring has wrong length");
  RecolourResult res;
  std::vector<VertexMemory> mem(n);
  for (Vertex v = 0; v < n; ++v) {
    Rng rng = Rng::keyed(seed, v, 0);
    mem[v] = initial_memory(rng);
    mem[v].colour = initial[v];
  }

  Colouring3 cur(n);
  for (Vertex v = 0; v < n; ++v) cur[v] = mem[v].colour;
  std::vector<ColourCounts> counts(n), prev_counts;
  for (Vertex v = 0; v < n; ++v) counts[v] = out_colour_counts(d, cur, v);
  res.trace.records.push_back(make_record(1, d, cur, counts, 0));

  std::vector<Vertex> changed;
  for (std::size_t step = 1; step <= steps; ++step) {
    changed.clear();
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t deg = d.out_degree(v);
      if (deg == 0) continue;
      const Colour own = cur[v];
      const bool nonmaj = more_than_half(counts[v][index_of(own)], deg);
      VertexMemory& m = mem[v];
      if (step == 1 || mode == RecolourMode::Simple) {
        if (!nonmaj) continue;
        Rng rng = Rng::keyed(seed, v, step);
        initial_flush(m, rng);
      } else {
        const auto gamma = overtake_from_counts(prev_counts[v], counts[v], deg);
        if (nonmaj && gamma != own) ++res.soundness_violations;
        if (!gamma) continue;
        Rng rng = Rng::keyed(seed, v, step);
        react_to_overtake(m, *gamma, rng, &res.personality_stats);
      }
      if (m.colour != own) changed.push_back(v);
    }
    // All decisions above read the frozen pre-step colours and counts.
    prev_counts = counts;
    for (Vertex v : changed) {
      const Colour from = cur[v];
      const Colour to = mem[v].colour;
      cur[v] = to;
      for (Vertex w : d.in(v)) {
        --counts[w][index_of(from)];
        ++counts[w][index_of(to)];
      }
    }
    res.trace.records.push_back(make_record(step + 1, d, cur, counts, changed.size()));
  }

  res.final_colours = cur;
  res.state.colours = std::move(cur);
  res.state.personality.resize(n);
  res.state.last_excluded.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    res.state.personality[v] = mem[v].personality;
    res.state.last_excluded[v] = mem[v].last_excluded;
  }
  res.state.t = steps + 1;
  return res;
}

RecolourResult run_recolouring(const Digraph& d, RecolourMode mode, std::size_t steps, Seed seed) {
  Colouring3 init(d.n());
  for (Vertex v = 0; v < d.n(); ++v) {
    Rng rng = Rng::keyed(seed, v, 0);
    init[v] = initial_memory(rng).colour;
  }
  return run_recolouring_from(d, mode, steps, seed, init);
}

DefectResult defect_2col(const Digraph& d, const Partition2& part) {
  if (part.size() != d.n()) throw std::invalid_argument("partition has wrong length");
  DefectResult r;
  r.per_vertex.assign(d.n(), 0);
  for (Vertex v = 0; v < d.n(); ++v) {
    std::uint32_t same = 0;
    for (Vertex w : d.out(v))
      if (part[w] == part[v]) ++same;
    const auto opp = static_cast<std::uint32_t>(d.out_degree(v)) - same;
    r.per_vertex[v] = same > opp ? same - opp : 0;
    r.total += r.per_vertex[v];
  }
  return r;
}

}  // namespace majcol
