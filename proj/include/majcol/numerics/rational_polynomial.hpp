#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace majcol::numerics {

using Rational = mpq_class;
using Integer = mpz_class;

/// Univariate polynomial with exact rational coefficients; coeffs[k] is the
/// coefficient of f^k. Trailing zeros are always stripped, so the zero
/// polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(const Rational& c);
  /// c * f^k
  static RationalPolynomial monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  RationalPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  /// Sum of |c_k| r^k, an upper bound for |p| on [-r, r].
  Rational abs_bound(const Rational& r) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& s);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Power of a polynomial, p^e.
  RationalPolynomial pow(std::size_t e) const;

  std::string to_string(const std::string& var = "f") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Integer binomial(unsigned long n, unsigned long k);

}  // namespace majcol::numerics
