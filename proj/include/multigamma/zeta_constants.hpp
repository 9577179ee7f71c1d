// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_ZETA_CONSTANTS_HPP
#define MULTIGAMMA_ZETA_CONSTANTS_HPP

#include <array>

#include "multigamma/evaluation.hpp"
#include "multigamma/polynomial.hpp"

namespace multigamma {

/// Largest j for which zeta'(-j) is tabulated.
inline constexpr int kMaxZetaPrimeIndex = 8;

/// Riemann zeta for real s != 1. Euler-MacLaurin continuation for s >= -1,
/// the reflection formula below that.
double riemann_zeta(double s);

/// zeta'(-j) for 0 <= j <= kMaxZetaPrimeIndex.
double zeta_prime_neg(int j);
double euler_gamma();
/// log A for the Glaisher-Kinkelin constant A.
double kinkelin_log();

/// Constants computed once on first use.
struct ConstantsCache {
  double gamma = 0;
  std::array<double, kMaxZetaPrimeIndex + 1> zeta_prime_neg{};
  double kinkelin_log = 0;

  static const ConstantsCache& instance();
};

/// C_j = -zeta'(-j) - 1/(j+1)^2.
double cj_constant(int j);

/// C_j from its integral representation: the Euler-MacLaurin boundary terms
/// of t^j log t at t = 1 up to `order`, plus the periodic-Bernoulli integral.
/// Requires order >= j + 2.
Evaluation cj_integral(int j, int order);

/// phi_{j,r} = (d/dt)^r { t^{j+1} log t/(j+1) - t^{j+1}/(j+1)^2 } at t = 1.
Rational phi_coefficient(int j, int r);

/// P_j(x) = sum_{r=0}^{j+1} B_r/r! phi_{j,r} x^{j-r+1}.
const RationalPolynomial& pj_polynomial(int j);

/// Summand of the product for exp(zeta'(-j)) at a real point w > 0:
/// P_j(w+1) - P_j(w) + B_{j+1}(w+1)/(j+1) log(1 + 1/w).
/// Large w is evaluated through the exact Laurent expansion in 1/w.
long double zeta_product_summand(int j, long double w);

/// Estimate of sum_{k>=0} zeta_product_summand(j, w + k).
double zeta_product_tail(int j, double w);

/// log of the K-term partial product: P_j(1) + sum_{k=1}^K summand(j, k).
/// The error field carries the estimated remaining tail.
Evaluation zeta_prime_product(int j, long K);

}  // namespace multigamma

#endif  // MULTIGAMMA_ZETA_CONSTANTS_HPP
