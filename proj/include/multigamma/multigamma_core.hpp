// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_MULTIGAMMA_CORE_HPP
#define MULTIGAMMA_MULTIGAMMA_CORE_HPP

#include <complex>
#include <vector>

#include "multigamma/evaluation.hpp"
#include "multigamma/polynomial.hpp"

namespace multigamma {

/// Largest level served by the classical routes (zeta'(-j) is tabulated for
/// j <= 8).
inline constexpr int kMaxLevel = 9;
/// Default half-angle excluded around the negative axis for asymptotics.
inline constexpr double kDefaultSectorDelta = 0.5235987755982988;  // pi/6
/// Shift target for the recurrence dispatcher.
inline constexpr double kShiftThreshold = 20.0;

/// One Bernoulli row of the asymptotic series: weight * sum_s c_s (z+1)^-s.
struct BernoulliRow {
  int index = 0;    // r, the Bernoulli index
  Rational weight;  // B_r / r!
  /// inverse_powers[s] multiplies (z+1)^-s; entry 0 is always zero.
  std::vector<Rational> inverse_powers;
};

/// Exact large-z expansion of log G_n(z+1):
///   log_poly(z) log(z+1) + alg_poly(z) + sum_j zeta_prime_polys[j](z) zeta'(-j)
///   + sum over rows of weight * F(z).
struct StirlingExpansion {
  int n = 0;
  RationalPolynomial log_poly;
  RationalPolynomial alg_poly;
  std::vector<RationalPolynomial> zeta_prime_polys;
  /// Even rows r = 2, 4, ..., 2 * rows (odd rows past r = 1 vanish, r = 1
  /// has a zero factor).
  std::vector<BernoulliRow> bernoulli_terms;
  int remainder_order = 0;
};

/// Rows are built for Bernoulli indices up to this bound.
inline constexpr int kMaxStirlingRows = 29;

/// Cached per n (1 <= n <= kMaxLevel).
const StirlingExpansion& stirling_coefficients(int n);

/// F_{n,r-1}(z) = (d/dt)^{r-1} { binom(-t, n-1) log((z+t)/(z+1)) } at t = 1.
double f_n_remainder_terms(int n, int r, double z);
/// Exact Laurent data of F_{n,k} in 1/(z+1): entry s multiplies (z+1)^-s.
std::vector<Rational> f_n_inverse_powers(int n, int k);

/// R_{n,m}(z) = (-1)^{m-1}/m! int_1^inf Bbar_m(t) f^(m)(t) dt with
/// f(t) = binom(-t, n-1) log((z+t)/(z+1)). Requires z > -1 and m > n.
Evaluation em_remainder(int n, double z, int m);

/// log G_n(z+1) from the convergent Euler-MacLaurin form of order m.
Evaluation multigamma_em(int n, double z, int m);

/// Truncated large-z series of log G_n(z+1), rows r = 2, 4, ..., 2R. The
/// error is the magnitude of the first omitted row. Requires
/// |arg z| < pi - delta.
ComplexEvaluation higher_stirling(int n, std::complex<double> z, int R, double delta = kDefaultSectorDelta);
Evaluation higher_stirling(int n, double z, int R);

/// Dispatcher: the large-z series directly when |z| >= 20 inside the
/// sector, otherwise the series at z + S followed by the functional
/// equation down the hierarchy. Integers z <= -1 raise a pole error.
ComplexEvaluation eval_log_multigamma(int n, std::complex<double> z, double tol = 1e-12);
/// Real argument; for z < -1 the value is log|G_n(z+1)|.
Evaluation eval_log_multigamma(int n, double z, double tol = 1e-12);

/// K-term partial sum of K_j(z); requires z > -1.
double kj_series(int j, double z, long K);

/// Q_j(z) for 0 <= j <= 8.
const RationalPolynomial& qj_polynomial(int j);

/// Exact data of the Weierstrass product of level n:
///   log G_n(z+1) = F_n(z) + sum_k [ exponent(k) log(1 + z/k) + Phi_n(z,k) ].
struct WeierstrassForm {
  int n = 0;
  /// F_n(z) = poly + sum_r zeta_prime_polys[r](z) zeta'(-r) + gamma_poly(z) * gamma.
  RationalPolynomial prefactor_poly;
  std::vector<RationalPolynomial> zeta_prime_polys;
  RationalPolynomial gamma_poly;
  /// -binom(-k, n-1) as a polynomial in k.
  RationalPolynomial exponent_poly;
  /// phi_coeffs[mu + 1] is the polynomial in z multiplying k^mu,
  /// mu = -1..n-2.
  std::vector<RationalPolynomial> phi_coeffs;
};

const WeierstrassForm& weierstrass_form(int n);

/// Phi_n(z, k), evaluated exactly from the first-kind Stirling numbers.
Rational phi_n(int n, const Rational& z, long k);
double phi_n(int n, double z, long k);

/// K-term partial product in log form; the error field is the asymptotic
/// estimate of the omitted tail. Real z <= -1 raises a domain error.
ComplexEvaluation weierstrass_log(int n, std::complex<double> z, long K);
Evaluation weierstrass_log(int n, double z, long K);

}  // namespace multigamma

#endif  // MULTIGAMMA_MULTIGAMMA_CORE_HPP
