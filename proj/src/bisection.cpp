#include "majcol/bisection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace majcol {

const char* to_string(BisectMode m) { return m == BisectMode::Internal ? "internal" : "external"; }

namespace {

bool conforms(std::size_t same, std::size_t deg, BisectMode mode) {
  return mode == BisectMode::Internal ? 2 * same >= deg : 2 * same <= deg;
}

std::size_t same_side(const Graph& g, const Partition2& part, Vertex v) {
  std::size_t s = 0;
  for (Vertex w : g.adj(v)) s += part[w] == part[v];
  return s;
}

std::size_t imbalance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// Set of vertex ids with O(1) insert/erase.
class IndexedSet {
 public:
  explicit IndexedSet(std::size_t n) : pos_(n, kAbsent) {}
  void insert(Vertex v) {
    if (pos_[v] != kAbsent) return;
    pos_[v] = items_.size();
    items_.push_back(v);
  }
  void erase(Vertex v) {
    if (pos_[v] == kAbsent) return;
    const Vertex last = items_.back();
    items_[pos_[v]] = last;
    pos_[last] = pos_[v];
    items_.pop_back();
    pos_[v] = kAbsent;
  }
  const std::vector<Vertex>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  static constexpr std::size_t kAbsent = SIZE_MAX;
  std::vector<std::size_t> pos_;
  std::vector<Vertex> items_;
};

}  // namespace

bool internal_status(const Graph& g, const Partition2& part, Vertex v, BisectMode mode) {
  return conforms(same_side(g, part, v), g.degree(v), mode);
}

std::size_t count_nonconforming(const Graph& g, const Partition2& part, BisectMode mode) {
  std::size_t z = 0;
  for (Vertex v = 0; v < g.n(); ++v) z += !internal_status(g, part, v, mode);
  return z;
}

std::size_t cut_size(const Graph& g, const Partition2& part) {
  std::size_t x = 0;
  for (const auto& [u, v] : g.edges()) x += part[u] != part[v];
  return x;
}

bool is_bisection(const Partition2& part) {
  const auto ones = static_cast<std::size_t>(std::count(part.begin(), part.end(), Side::One));
  return imbalance(ones, part.size() - ones) <= 1;
}

bool FlipSchedule::entry(Vertex v, std::uint64_t round) const {
  Rng rng = Rng::keyed(seed_, v, round);
  return rng.bernoulli(p_);
}

BatchFlipResult batch_flip_run(const Graph& g, BisectMode mode, std::size_t d, double eps, Seed seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  if (d == 0) throw std::invalid_argument("degree bound d must be positive");
  if (g.max_degree() > d) throw std::invalid_argument("max degree exceeds the bound d");
  const std::size_t n = g.n();

  BatchFlipResult res;
  const double k_exact = std::ceil(5.0 * static_cast<double>(d) * static_cast<double>(d) / eps);
  res.rounds_planned = static_cast<std::uint64_t>(std::min<double>(k_exact, kMaxFlipRounds));
  res.capped = k_exact > static_cast<double>(kMaxFlipRounds);
  const FlipSchedule schedule(derive_seed(seed, 0x666c6970ULL), 1.0 / static_cast<double>(d),
                              res.rounds_planned);

  Partition2 part(n);
  {
    Rng rng(derive_seed(seed, 0x696e6974ULL));
    for (auto& s : part) s = rng.below(2) == 0 ? Side::One : Side::Two;
  }
  const Partition2 initial = part;

  std::vector<std::size_t> same(n);
  IndexedSet bad(n);
  std::size_t size1 = 0, same_total = 0;
  for (Vertex v = 0; v < n; ++v) {
    same[v] = same_side(g, part, v);
    same_total += same[v];
    size1 += part[v] == Side::One;
    if (!conforms(same[v], g.degree(v), mode)) bad.insert(v);
  }
  const std::size_t two_m = 2 * g.edge_count();
  auto record = [&](std::uint64_t i) {
    res.trace.push_back({i, bad.size(), (two_m - same_total) / 2, size1, n - size1});
  };
  record(0);

  const double max_imbalance = eps * static_cast<double>(n) / static_cast<double>(d);
  auto feasible = [&](const FlipRecord& r) {
    return static_cast<double>(imbalance(r.size1, r.size2)) <= max_imbalance;
  };
  std::size_t best_feasible = feasible(res.trace[0]) ? 0 : SIZE_MAX;
  std::size_t best_any = 0;

  std::vector<Vertex> flips;
  std::vector<std::size_t> flip_offsets{0};
  std::vector<char> flipped(n, 0);
  std::uint64_t i = 0;
  while (i < res.rounds_planned && bad.size() > 0) {
    ++i;
    flips.resize(flip_offsets.back());
    for (Vertex v : bad.items())
      if (schedule.entry(v, i)) flips.push_back(v);
    std::sort(flips.begin() + static_cast<std::ptrdiff_t>(flip_offsets.back()), flips.end());
    const auto round_begin = flips.begin() + static_cast<std::ptrdiff_t>(flip_offsets.back());
    for (auto it = round_begin; it != flips.end(); ++it) flipped[*it] = 1;
    for (auto it = round_begin; it != flips.end(); ++it) {
      const Vertex v = *it;
      part[v] = other(part[v]);
      if (part[v] == Side::One) ++size1; else --size1;
    }
    for (auto it = round_begin; it != flips.end(); ++it) {
      const Vertex v = *it;
      for (Vertex w : g.adj(v)) {
        if (flipped[w]) continue;
        // v moved: the pair (v, w) toggles between same and opposite.
        if (part[w] == part[v]) {
          ++same[w];
          ++same_total;
        } else {
          --same[w];
          --same_total;
        }
        if (conforms(same[w], g.degree(w), mode)) bad.erase(w); else bad.insert(w);
      }
    }
    for (auto it = round_begin; it != flips.end(); ++it) {
      const Vertex v = *it;
      const std::size_t old = same[v];
      same[v] = same_side(g, part, v);
      same_total = same_total - old + same[v];
      if (conforms(same[v], g.degree(v), mode)) bad.erase(v); else bad.insert(v);
    }
    for (auto it = round_begin; it != flips.end(); ++it) flipped[*it] = 0;
    flip_offsets.push_back(flips.size());
    record(i);
    const FlipRecord& r = res.trace.back();
    if (r.z < res.trace[best_any].z) best_any = res.trace.size() - 1;
    if (feasible(r) && (best_feasible == SIZE_MAX || r.z < res.trace[best_feasible].z))
      best_feasible = res.trace.size() - 1;
  }
  res.rounds_run = i;
  res.feasible = best_feasible != SIZE_MAX;
  res.best_round = res.feasible ? best_feasible : best_any;

  res.lowest_round = best_any;
  // Replay the flip log up to the chosen rounds.
  auto replay = [&](std::uint64_t round) {
    Partition2 p = initial;
    for (std::size_t k = flip_offsets[0]; k < flip_offsets[round]; ++k) p[flips[k]] = other(p[flips[k]]);
    return p;
  };
  res.best = replay(res.best_round);
  res.lowest = replay(res.lowest_round);
  return res;
}

Partition2 balance_to_bisection(const Graph& g, const Partition2& part, BisectMode mode) {
  const std::size_t n = g.n();
  const auto ones = static_cast<std::size_t>(std::count(part.begin(), part.end(), Side::One));
  const std::size_t twos = n - ones;
  const std::size_t moves = imbalance(ones, twos) / 2;
  Partition2 out = part;
  if (moves == 0) return out;
  const Side larger = ones > twos ? Side::One : Side::Two;

  std::vector<Vertex> bad, good;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] != larger) continue;
    (internal_status(g, part, v, mode) ? good : bad).push_back(v);
  }
  std::stable_sort(good.begin(), good.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::size_t done = 0;
  for (Vertex v : bad) {
    if (done == moves) break;
    out[v] = other(larger);
    ++done;
  }
  for (Vertex v : good) {
    if (done == moves) break;
    out[v] = other(larger);
    ++done;
  }
  return out;
}

AlmostBisectionResult almost_bisection(const Graph& g, BisectMode mode, double eps, Seed seed,
                                       std::size_t max_retries) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const std::size_t n = g.n();
  AlmostBisectionResult out;
  BisectionStats& st = out.stats;
  st.mode = mode;
  st.eps = eps;

  const std::size_t maxdeg = g.max_degree();
  // Smallest d with |V_{>=d}| <= (eps/3) n and sum of their degrees <= (eps/3) n.
  std::vector<std::size_t> cnt(maxdeg + 2, 0), degsum(maxdeg + 2, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++cnt[g.degree(v)];
    degsum[g.degree(v)] += g.degree(v);
  }
  for (std::size_t k = maxdeg; k-- > 0;) {
    cnt[k] += cnt[k + 1];
    degsum[k] += degsum[k + 1];
  }
  const double budget = eps / 3.0 * static_cast<double>(n);
  std::size_t trim_d = maxdeg + 1;
  for (std::size_t k = 1; k <= maxdeg + 1; ++k)
    if (static_cast<double>(cnt[k]) <= budget && static_cast<double>(degsum[k]) <= budget) {
      trim_d = k;
      break;
    }

  std::vector<Vertex> keep, trimmed;
  for (Vertex v = 0; v < n; ++v) (g.degree(v) >= trim_d ? trimmed : keep).push_back(v);
  st.trimmed = trimmed.size();
  const Graph h = trimmed.empty() ? g : induced_subgraph(g, keep);
  st.d_used = std::max<std::size_t>(1, h.max_degree());

  // Places the trimmed vertices, keeping the bisection.
  auto assemble = [&](const Partition2& sub) {
    Partition2 part(n, Side::One);
    std::vector<char> placed(n, 0);
    std::size_t size1 = 0, size2 = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      part[keep[i]] = sub[i];
      placed[keep[i]] = 1;
      (sub[i] == Side::One ? size1 : size2)++;
    }
    for (Vertex v : trimmed) {
      Side s;
      if (size1 != size2) {
        s = size1 < size2 ? Side::One : Side::Two;
      } else {
        std::size_t on1 = 0, on2 = 0;
        for (Vertex w : g.adj(v))
          if (placed[w]) (part[w] == Side::One ? on1 : on2)++;
        const bool prefer_one = mode == BisectMode::Internal ? on1 >= on2 : on1 <= on2;
        s = prefer_one ? Side::One : Side::Two;
      }
      part[v] = s;
      placed[v] = 1;
      (s == Side::One ? size1 : size2)++;
    }
    return part;
  };

  const auto allowed = static_cast<std::size_t>(std::floor(eps * static_cast<double>(n)));
  std::size_t best_bad = SIZE_MAX;
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    auto run = batch_flip_run(h, mode, st.d_used, eps / 3.0, derive_seed(seed, attempt));
    if (run.capped && attempt == 0)
      st.warnings.push_back("round count capped at " + std::to_string(kMaxFlipRounds));
    if (!run.feasible)
      st.warnings.push_back("attempt " + std::to_string(attempt) +
                            ": no visited state met the imbalance bound");
    // The balanced state is also compared with the balanced min-Z state.
    for (const Partition2* cand : {&run.best, &run.lowest}) {
      Partition2 part = assemble(balance_to_bisection(h, *cand, mode));
      const std::size_t bad = count_nonconforming(g, part, mode);
      if (bad < best_bad) {
        best_bad = bad;
        out.partition = std::move(part);
        out.trace = run.trace;
        st.retries = attempt;
        st.rounds_run = run.rounds_run;
      }
    }
    if (best_bad <= allowed) break;
  }
  Partition2& part = out.partition;

  st.nonconforming = count_nonconforming(g, part, mode);
  st.final_fraction = n ? static_cast<double>(st.nonconforming) / static_cast<double>(n) : 0.0;
  st.bisection = is_bisection(part);
  return out;
}

}  // namespace majcol
