// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_QSERIES_HPP
#define MULTIGAMMA_QSERIES_HPP

#include <complex>

#include "multigamma/evaluation.hpp"
#include "multigamma/polynomial.hpp"

namespace multigamma {

/// Deformation parameter 0 < q < 1 with log q cached.
class QContext {
 public:
  /// Throws ErrorKind::kDomain unless 0 < q < 1.
  explicit QContext(double q);

  double q() const noexcept { return q_; }
  double log_q() const noexcept { return log_q_; }

 private:
  double q_;
  double log_q_;
};

/// [z] = (1 - q^z)/(1 - q), via expm1 so that q -> 1 stays accurate.
double q_number(double z, const QContext& ctx);
std::complex<double> q_number(std::complex<double> z, const QContext& ctx);

/// Li_r(x) = sum x^k / k^r for |x| < 1, or x = 1 with r >= 2.
double polylog(int r, double x, double tol = 1e-17);

/// L_1(z) = -log(1 - q^z); L_r(z) = Li_r(q^z) / (log q)^{r-1}. Requires z > 0.
double big_l(int r, double z, const QContext& ctx);

/// (d/dx)^s log(1 - q^x) for x > 0; s = 0 gives the function itself.
double q_log_derivative(int s, double x, const QContext& ctx);

/// log Gamma(z+1; q) from the Jackson product. K = 0 picks the smallest K
/// with q^K < tol (1 - q).
Evaluation jackson_q_gamma(double z, const QContext& ctx, long K = 0, double tol = 1e-17);

/// P_1 = 1, P_{n+1} = (x - x^2) P_n' + n x P_n. P_n(1) = (n-1)!.
RationalPolynomial moak_polynomial(int n);

/// Terms of an Euler-MacLaurin type expansion of a q-log-gamma value.
///
/// remainder holds the signed contribution of the remainder integral; its
/// error estimate covers every quadrature in the assembly.
struct QExpansionTerms {
  double leading = 0;
  double integral_term = 0;
  double constant = 0;
  double bernoulli_sum = 0;
  Evaluation remainder;

  double total() const { return leading + integral_term + constant + bernoulli_sum + remainder.value; }
  Evaluation evaluation() const;
};

/// Expansion of log Gamma(z; q) with Bernoulli terms k = 1..m and the
/// remainder of order 2m. Requires z > 0 and m >= 2.
QExpansionTerms q_gamma_expansion(double z, const QContext& ctx, int m);

/// log G_n(z+1; q) from the infinite product. K = 0 chooses K from tol.
Evaluation q_multigamma_product(int n, double z, const QContext& ctx, long K = 0, double tol = 1e-16);

/// log G_n(z+1; q) by the Euler-MacLaurin expansion with order m > n.
QExpansionTerms q_multigamma_expansion(int n, double z, const QContext& ctx, int m);

/// C_j(q): boundary terms of t^j log((1-q^t)/(1-q)) at t = 1 up to `order`
/// plus the periodic-Bernoulli integral. Requires order >= j + 2.
Evaluation q_cj_constant(int j, int order, const QContext& ctx);

/// Dispatcher: the product for q <= 0.999, the expansion above that.
Evaluation q_multigamma(int n, double z, const QContext& ctx, double tol = 1e-12);

}  // namespace multigamma

#endif  // MULTIGAMMA_QSERIES_HPP
