#pragma once

#include <cstddef>
#include <vector>

#include "majcol/numerics/rational_polynomial.hpp"

namespace majcol::numerics {

/// Probability (as a polynomial in the recolouring rate f) that red overtakes
/// among d out-neighbours: red count goes from <= floor(d/2) to > floor(d/2)
/// when each vertex independently moves to each other colour w.p. f/2.
/// The outer sum over the initial red count starts at i = 0.
RationalPolynomial q_poly(std::size_t d);

/// Same quantity by enumerating all (initial, final) colour vectors. d <= 7.
RationalPolynomial q_oracle_poly(std::size_t d);
inline constexpr std::size_t kMaxOracleDegree = 7;

/// Closed form for the derivative of q_poly(d) at 0.
Rational q_prime0(std::size_t d);
/// Same in double precision, safe for large d.
double q_prime0_double(std::size_t d);

/// Q_d(f) for every d in [0, dmax], double precision, O(dmax^3) flops.
std::vector<double> q_values_upto(std::size_t dmax, double f);

/// Pr[Bin(d, 1/3) > d/2]: the chance a vertex of out-degree d is not
/// majority-coloured under a uniform 3-colouring.
Rational nonmajority_prob(std::size_t d);
double nonmajority_prob_double(std::size_t d);

/// Chernoff bound exp(-d * KL(1/2 || 1/3)) on Pr[Bin(d,1/3) > d/2], which
/// also bounds Q_d(f) for every f.
double overtake_upper_bound(std::size_t d);

/// Quantities from the slope lemma's proof.
Rational a_coeff(std::size_t d);
Rational b_coeff(std::size_t d);

}  // namespace majcol::numerics
