// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_QUADRATURE_HPP
#define MULTIGAMMA_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "multigamma/evaluation.hpp"

namespace multigamma {

/// Gauss-Legendre rule mapped to [0, 1].
struct GaussRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

/// Cached rule with the given number of points (computed by Newton iteration
/// on the Legendre recurrence).
const GaussRule& gauss_legendre(int points);

/// f and its derivatives f^(k), k = 0..max_order, supplied analytically.
struct SmoothFunction {
  std::function<double(int, double)> derivative;
  int max_order = 0;
  /// Optional; when present, the integral term is taken from it exactly.
  std::function<double(double)> antiderivative;
};

/// sum_{r=M}^{N-1} f(r) by the Euler-MacLaurin formula of order m, with the
/// periodic-Bernoulli remainder integrated by composite Gauss quadrature.
Evaluation em_sum(const SmoothFunction& f, long M, long N, int m);

/// Integrand g of int_start^inf Bbar_m(t) g(t) dt.
struct TailIntegrand {
  int order = 1;  // m, the kernel index
  std::function<double(double)> core;
  /// p with |g(t)| = O(t^-p); must be >= 2.
  int decay_exponent = 2;
  /// Optional g^(k)(t) for k = 0..derivative_order. When present, the range
  /// past the current interval is closed by the integration-by-parts series.
  std::function<double(int, double)> derivative;
  int derivative_order = 0;
  /// Lower limit; must be an integer.
  double start = 1.0;
};

/// int_start^inf Bbar_m(t) g(t) dt, summed over unit intervals.
Evaluation tail_integral(const TailIntegrand& g, double tol = 1e-14);

/// int_a^b f by the 32-point rule on pieces of length <= 1; the error is
/// the 16/32-point discrepancy.
Evaluation integrate(const std::function<double(double)>& f, double a, double b);

}  // namespace multigamma

#endif  // MULTIGAMMA_QUADRATURE_HPP
