// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_COMBINATORICS_HPP
#define MULTIGAMMA_COMBINATORICS_HPP

#include <vector>

#include "multigamma/polynomial.hpp"

namespace multigamma {

/// Largest Bernoulli index served from the exact table.
inline constexpr int kBernoulliCapacity = 60;

/// Exact Bernoulli numbers B_0..B_60 and polynomials B_n(t).
///
/// Convention: t e^{xt}/(e^t - 1) = sum B_n(x) t^n / n!, so B_1 = -1/2.
/// Built once on first use; read-only afterwards.
class BernoulliTable {
 public:
  static const BernoulliTable& instance();

  int capacity() const noexcept { return kBernoulliCapacity; }
  /// Throws ErrorKind::kOrderTooLarge past the capacity.
  const Rational& number(int n) const;
  const RationalPolynomial& polynomial(int n) const;

 private:
  BernoulliTable();

  std::vector<Rational> numbers_;
  std::vector<RationalPolynomial> polys_;
};

Rational bernoulli_number(int n);
/// B_n(t), evaluated exactly at the (dyadic) double t and rounded once.
double bernoulli_poly(int n, double t);
/// B_n(t - floor(t)); requires t >= 0.
double periodic_bernoulli(int n, double t);

Rational factorial(int n);
Rational binomial(int n, int k);

/// u(u-1)...(u-n+1) expanded; the coefficient of u^j is the signed Stirling
/// number of the first kind. n = 0 gives the constant 1.
RationalPolynomial stirling_first(int n);

/// binom(x, k) = x(x-1)...(x-k+1)/k! as a polynomial in x.
RationalPolynomial binom_poly(int k);

/// Polynomials G_0..G_{n-1} in z with binom(z-u, n-1) = sum_j G_j(z) u^j.
std::vector<RationalPolynomial> gnj_coefficients(int n);

/// (-d/dz)^{r-1} binom(z, n-1).
RationalPolynomial binom_deriv_poly(int n, int r);

}  // namespace multigamma

#endif  // MULTIGAMMA_COMBINATORICS_HPP
