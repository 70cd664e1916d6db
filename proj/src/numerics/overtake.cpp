#include "majcol/numerics/overtake.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace majcol::numerics {

namespace {

Rational pow_q(const Rational& x, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= x;
  return r;
}

RationalPolynomial one_minus(const Rational& s) {
  // 1 - s*f
  return RationalPolynomial({Rational(1), Rational(-s)});
}

// Binomial pmf row Bin(n, q), computed stably in log space.
std::vector<double> binom_pmf(std::size_t n, double q) {
  std::vector<double> p(n + 1, 0.0);
  if (q <= 0.0) {
    p[0] = 1.0;
    return p;
  }
  if (q >= 1.0) {
    p[n] = 1.0;
    return p;
  }
  const double lq = std::log(q), lr = std::log1p(-q);
  const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::size_t k = 0; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    p[k] = std::exp(lgn - std::lgamma(kk + 1.0) - std::lgamma(static_cast<double>(n - k) + 1.0) +
                    kk * lq + static_cast<double>(n - k) * lr);
  }
  return p;
}

}  // namespace

RationalPolynomial q_poly(std::size_t d) {
  const std::size_t h = d / 2;
  const Rational third(1, 3), two_thirds(2, 3), half(1, 2);
  const auto stay = one_minus(1);             // 1 - f
  const auto nonred_stay = one_minus(half);   // 1 - f/2
  const auto to_red = RationalPolynomial::monomial(half, 1);  // f/2
  const auto f = RationalPolynomial::monomial(1, 1);

  std::vector<RationalPolynomial> pw_red(d + 1), pw_nonred(d + 1), pw_f(d + 1), pw_stay(d + 1);
  pw_red[0] = pw_nonred[0] = pw_f[0] = pw_stay[0] = RationalPolynomial::constant(1);
  for (std::size_t k = 1; k <= d; ++k) {
    pw_red[k] = pw_red[k - 1] * to_red;
    pw_nonred[k] = pw_nonred[k - 1] * nonred_stay;
    pw_f[k] = pw_f[k - 1] * f;
    pw_stay[k] = pw_stay[k - 1] * stay;
  }

  RationalPolynomial total;
  for (std::size_t i = 0; i <= h && i <= d; ++i) {
    const std::size_t r = d - i;  // initially non-red
    // tail[M] = sum_{m >= M} C(r,m) (f/2)^m (1-f/2)^{r-m}
    std::vector<RationalPolynomial> tail(r + 2);
    for (std::size_t m = r + 1; m-- > 0;) {
      tail[m] = tail[m + 1] + pw_red[m] * pw_nonred[r - m] * Rational(binomial(r, m));
    }
    RationalPolynomial inner;
    for (std::size_t k = 0; k <= i; ++k) {
      // k reds leave; need (i - k) + m >= h + 1
      const long need = static_cast<long>(h + 1) - static_cast<long>(i) + static_cast<long>(k);
      const std::size_t M = need < 0 ? 0 : static_cast<std::size_t>(need);
      if (M > r) continue;
      inner += pw_f[k] * pw_stay[i - k] * tail[M] * Rational(binomial(i, k));
    }
    total += inner * (Rational(binomial(d, i)) * pow_q(third, i) * pow_q(two_thirds, r));
  }
  return total;
}

RationalPolynomial q_oracle_poly(std::size_t d) {
  if (d > kMaxOracleDegree)
    throw std::invalid_argument("q_oracle_poly: d=" + std::to_string(d) +
                                " exceeds the enumeration limit " + std::to_string(kMaxOracleDegree));
  const std::size_t h = d / 2;
  std::size_t states = 1;
  for (std::size_t i = 0; i < d; ++i) states *= 3;
  // count[s]: (initial, final) pairs with s unchanged vertices where red overtakes
  std::vector<unsigned long> count(d + 1, 0);
  std::vector<int> a(d), b(d);
  for (std::size_t x = 0; x < states; ++x) {
    std::size_t t = x, red0 = 0;
    for (std::size_t i = 0; i < d; ++i, t /= 3) {
      a[i] = static_cast<int>(t % 3);
      red0 += a[i] == 0;
    }
    if (red0 > h) continue;
    for (std::size_t y = 0; y < states; ++y) {
      std::size_t u = y, red1 = 0, stays = 0;
      for (std::size_t i = 0; i < d; ++i, u /= 3) {
        b[i] = static_cast<int>(u % 3);
        red1 += b[i] == 0;
        stays += a[i] == b[i];
      }
      if (red1 > h) ++count[stays];
    }
  }
  const Rational half(1, 2);
  RationalPolynomial q;
  const Rational w = pow_q(Rational(1, 3), d);
  for (std::size_t s = 0; s <= d; ++s) {
    if (count[s] == 0) continue;
    q += one_minus(1).pow(s) * RationalPolynomial::monomial(half, 1).pow(d - s) *
         (w * Rational(Integer(count[s])));
  }
  return q;
}

Rational q_prime0(std::size_t d) {
  const std::size_t h = d / 2;
  Rational r = Rational(Integer(static_cast<unsigned long>(d - h))) * Rational(binomial(d, h)) *
               pow_q(Rational(1, 3), h) * pow_q(Rational(2, 3), d - h) / 2;
  r.canonicalize();
  return r;
}

double q_prime0_double(std::size_t d) {
  if (d == 0) return 0.0;
  const double dd = static_cast<double>(d), hh = static_cast<double>(d / 2);
  const double lg = std::lgamma(dd + 1) - std::lgamma(hh + 1) - std::lgamma(dd - hh + 1);
  return 0.5 * (dd - hh) * std::exp(lg - hh * std::log(3.0) + (dd - hh) * std::log(2.0 / 3.0));
}

std::vector<double> q_values_upto(std::size_t dmax, double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("f must lie in [0,1]");
  // leave[i] = Bin(i, f) pmf; tail[r][M] = Pr[Bin(r, f/2) >= M]
  std::vector<std::vector<double>> leave(dmax / 2 + 1), tail(dmax + 1);
  for (std::size_t i = 0; i < leave.size(); ++i) leave[i] = binom_pmf(i, f);
  for (std::size_t r = 0; r <= dmax; ++r) {
    auto p = binom_pmf(r, f / 2);
    tail[r].assign(r + 2, 0.0);
    for (std::size_t m = r + 1; m-- > 0;) tail[r][m] = tail[r][m + 1] + p[m];
  }
  std::vector<double> q(dmax + 1, 0.0);
  for (std::size_t d = 1; d <= dmax; ++d) {
    const std::size_t h = d / 2;
    const auto init = binom_pmf(d, 1.0 / 3.0);
    double total = 0.0;
    for (std::size_t i = 0; i <= h; ++i) {
      const std::size_t r = d - i;
      double inner = 0.0;
      for (std::size_t k = 0; k <= i; ++k) {
        const std::size_t M = h + 1 - i + k;
        if (M > r) continue;
        inner += leave[i][k] * tail[r][M];
      }
      total += init[i] * inner;
    }
    q[d] = total;
  }
  return q;
}

Rational nonmajority_prob(std::size_t d) {
  Rational s = 0;
  for (std::size_t j = d / 2 + 1; j <= d; ++j)
    s += Rational(binomial(d, j)) * pow_q(Rational(1, 3), j) * pow_q(Rational(2, 3), d - j);
  s.canonicalize();
  return s;
}

double nonmajority_prob_double(std::size_t d) {
  const auto p = binom_pmf(d, 1.0 / 3.0);
  double s = 0.0;
  for (std::size_t j = d / 2 + 1; j <= d; ++j) s += p[j];
  return s;
}

double overtake_upper_bound(std::size_t d) {
  // KL(1/2 || 1/3) = 0.5 ln(9/8)
  return std::exp(-static_cast<double>(d) * 0.5 * std::log(9.0 / 8.0));
}

Rational a_coeff(std::size_t d) {
  if (d == 0) return 0;
  Rational s = 0;
  for (std::size_t i = d / 2; i <= d - 1; ++i)
    s += Rational(binomial(d - 1, i)) * pow_q(Rational(1, 3), i) * pow_q(Rational(2, 3), d - 1 - i);
  Rational a = s * Rational(Integer(static_cast<unsigned long>(d)), 3);
  a.canonicalize();
  return a;
}

Rational b_coeff(std::size_t d) {
  if (d == 0) return 0;
  const std::size_t h = d / 2;
  Rational b = Rational(Integer(static_cast<unsigned long>(2 * d))) * Rational(binomial(d - 1, h)) *
               pow_q(Rational(2), d - h) / pow_q(Rational(3), d);
  b.canonicalize();
  return b;
}

}  // namespace majcol::numerics
