#include "majcol/numerics/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "majcol/generators.hpp"

namespace majcol::numerics {

OverlapProbs overlap_probs(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  return {std::atan(std::sqrt(alpha / (1.0 - alpha))) / std::numbers::pi,
          std::atan(std::sqrt((1.0 - alpha) / alpha)) / std::numbers::pi};
}

namespace {

// Split of the vertex set: classes 11, 12, 21, 22 by (c, c').
struct Classes {
  std::size_t half = 0, agree = 0;
};

Classes classes_for(std::size_t n, double alpha) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 4");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  Classes c;
  c.half = n / 2;
  c.agree = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(c.half)));
  c.agree = std::clamp<std::size_t>(c.agree, 1, c.half - 1);
  return c;
}

// pmf of Bin(m, p) on 0..K with K covering all but ~1e-300 of the mass.
std::vector<double> binom_pmf_trunc(std::size_t m, double p) {
  const double mean = static_cast<double>(m) * p;
  const auto K = std::min<std::size_t>(m, static_cast<std::size_t>(mean + 40.0 * std::sqrt(mean + 1.0) + 40.0));
  std::vector<double> out(K + 1);
  const double lp = std::log(p), lq = std::log1p(-p), mm = static_cast<double>(m);
  for (std::size_t k = 0; k <= K; ++k) {
    const double kk = static_cast<double>(k);
    out[k] = std::exp(std::lgamma(mm + 1) - std::lgamma(kk + 1) - std::lgamma(mm - kk + 1) + kk * lp +
                      (mm - kk) * lq);
  }
  return out;
}

// Distribution of X - Y, indexed by offset |Y support|.
struct Diff {
  std::vector<double> pmf;
  long offset = 0;
  double at(long v) const {
    const long i = v + offset;
    return i < 0 || i >= static_cast<long>(pmf.size()) ? 0.0 : pmf[static_cast<std::size_t>(i)];
  }
};

Diff difference(const std::vector<double>& x, const std::vector<double>& y) {
  Diff d;
  d.offset = static_cast<long>(y.size()) - 1;
  d.pmf.assign(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) d.pmf[i + y.size() - 1 - j] += x[i] * y[j];
  return d;
}

// Pr[A >= |B|] for independent A, B.
double dominates_abs(const Diff& a, const Diff& b) {
  const long lo = -b.offset, hi = static_cast<long>(b.pmf.size()) - 1 - b.offset;
  const long span = std::max(-lo, hi);
  std::vector<double> within(static_cast<std::size_t>(span) + 1);  // Pr[|B| <= k]
  double acc = b.at(0);
  within[0] = acc;
  for (long k = 1; k <= span; ++k) {
    acc += b.at(k) + b.at(-k);
    within[static_cast<std::size_t>(k)] = acc;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < a.pmf.size(); ++i) {
    const long v = static_cast<long>(i) - a.offset;
    if (v < 0) continue;
    total += a.pmf[i] * within[static_cast<std::size_t>(std::min(v, span))];
  }
  return total;
}

}  // namespace

ExactOverlap exact_overlap(std::size_t n, double p, double alpha) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  const auto c = classes_for(n, alpha);
  const std::size_t k = c.agree, rest = c.half - k;
  ExactOverlap out;
  // Agreeing vertex in class 11: both events iff D22 - D11 >= |D21 - D12|.
  {
    const auto d22 = binom_pmf_trunc(k, p), d11 = binom_pmf_trunc(k - 1, p);
    const auto d21 = binom_pmf_trunc(rest, p), d12 = binom_pmf_trunc(rest, p);
    out.joint.p_same = dominates_abs(difference(d22, d11), difference(d21, d12));
  }
  // Disagreeing vertex in class 12: both iff D21 - D12 >= |D22 - D11|.
  {
    const auto d21 = binom_pmf_trunc(rest, p), d12 = binom_pmf_trunc(rest - 1, p);
    const auto d22 = binom_pmf_trunc(k, p), d11 = binom_pmf_trunc(k, p);
    out.joint.p_diff = dominates_abs(difference(d21, d12), difference(d22, d11));
  }
  {
    const auto own = binom_pmf_trunc(c.half - 1, p), other = binom_pmf_trunc(c.half, p);
    const auto diff = difference(other, own);
    for (std::size_t i = static_cast<std::size_t>(diff.offset); i < diff.pmf.size(); ++i)
      out.single += diff.pmf[i];
  }
  return out;
}

OverlapEstimate mc_overlap(std::size_t n, double p, double alpha, std::size_t trials, Seed seed) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  const auto c = classes_for(n, alpha);
  // c(v) = 0 for v < half; c'(v) = c(v) on the first `agree` vertices of each side.
  std::vector<std::uint8_t> side(n), side2(n);
  for (std::size_t v = 0; v < n; ++v) {
    const bool first = v < c.half;
    const std::size_t pos = first ? v : v - c.half;
    side[v] = first ? 0 : 1;
    side2[v] = pos < c.agree ? side[v] : static_cast<std::uint8_t>(1 - side[v]);
  }
  std::uint64_t hit_same = 0, hit_diff = 0, hit_single = 0, n_same = 0, n_diff = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto d = gen_digraph(n, p, derive_seed(seed, t));
    for (Vertex v = 0; v < n; ++v) {
      long own = 0, own2 = 0;
      const auto out = d.out(v);
      for (Vertex u : out) {
        own += side[u] == side[v];
        own2 += side2[u] == side2[v];
      }
      const long deg = static_cast<long>(out.size());
      const bool e = 2 * own <= deg, e2 = 2 * own2 <= deg;
      hit_single += e;
      if (side[v] == side2[v]) {
        ++n_same;
        hit_same += e && e2;
      } else {
        ++n_diff;
        hit_diff += e && e2;
      }
    }
  }
  OverlapEstimate est;
  auto freq = [](std::uint64_t hits, std::uint64_t total) {
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
  };
  auto se = [](double q, std::uint64_t total) {
    return total == 0 ? 0.0 : std::sqrt(q * (1.0 - q) / static_cast<double>(total));
  };
  est.samples_same = n_same;
  est.samples_diff = n_diff;
  est.p_same_hat = freq(hit_same, n_same);
  est.p_diff_hat = freq(hit_diff, n_diff);
  est.single_hat = freq(hit_single, n_same + n_diff);
  est.se_same = se(est.p_same_hat, n_same);
  est.se_diff = se(est.p_diff_hat, n_diff);
  est.se_single = se(est.single_hat, n_same + n_diff);
  est.alpha_used = 2.0 * static_cast<double>(c.agree) / static_cast<double>(n);
  return est;
}

}  // namespace majcol::numerics
