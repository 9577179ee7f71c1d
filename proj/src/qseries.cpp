// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "multigamma/combinatorics.hpp"
#include "multigamma/errors.hpp"
#include "multigamma/quadrature.hpp"
#include "multigamma/zeta_constants.hpp"

namespace multigamma {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxLogDerivative = 72;
// Derivatives requested from the q-side tail integrands.
constexpr int kTailDerivatives = 40;

// D_1 = x, D_s = P_s for s >= 2, so that
// (d/dx)^s log(1 - q^x) = -(log q/(1 - q^x))^s D_s(q^x).
const std::vector<NumericPolynomial<long double>>& log_derivative_polys() {
  static const std::vector<NumericPolynomial<long double>> table = [] {
    std::vector<NumericPolynomial<long double>> out(kMaxLogDerivative + 1);
    RationalPolynomial d = RationalPolynomial::identity();
    const RationalPolynomial x_minus_x2({Rational(0), Rational(1), Rational(-1)});
    for (int s = 1; s <= kMaxLogDerivative; ++s) {
      out[static_cast<std::size_t>(s)] = d.to_numeric<long double>();
      d = x_minus_x2 * d.derivative() + RationalPolynomial::monomial(Rational(s), 1) * d;
    }
    return out;
  }();
  return table;
}

// log(1 - q^x) without cancellation on either side of q^x = 1/2.
long double log1m_qpow(long double lam, long double x) {
  const long double e = lam * x;
  if (e > -0.6931471805599453L) return std::log(-std::expm1(e));
  return std::log1p(-std::exp(e));
}

long double hder(int s, long double x, long double lam) {
  if (s == 0) return log1m_qpow(lam, x);
  if (s > kMaxLogDerivative) throw_error(ErrorKind::kCapability, "q_log_derivative: order too large");
  const long double om = -std::expm1(lam * x);
  const long double u = std::exp(lam * x);
  return -std::pow(lam / om, s) * log_derivative_polys()[static_cast<std::size_t>(s)](u);
}

// binom(x, k) by the product formula.
long double binom_value(long double x, int k) {
  long double acc = 1;
  for (int i = 0; i < k; ++i) acc *= (x - i) / (i + 1);
  return acc;
}

long double binom_coefficient(int k, int i) {
  long double acc = 1;
  for (int l = 0; l < i; ++l) acc = acc * (k - l) / (l + 1);
  return acc;
}

// Derivatives of p(t) = binom(-t, n-1) as numeric polynomials.
std::vector<NumericPolynomial<long double>> neg_binom_derivatives(int n) {
  const RationalPolynomial p = binom_poly(n - 1).compose_linear(Rational(-1), Rational(0));
  std::vector<NumericPolynomial<long double>> out;
  for (int i = 0; i <= n - 1; ++i) out.push_back(p.derivative(i).to_numeric<long double>());
  return out;
}

// (d/dt)^k { p(t) [h(z+t) - h(z+1)] } for k >= 1.
long double product_log_derivative(const std::vector<NumericPolynomial<long double>>& p, int k, long double t,
                                   long double z, long double lam) {
  long double acc = 0;
  const int imax = std::min(k, static_cast<int>(p.size()) - 1);
  for (int i = 0; i <= imax; ++i) {
    const long double pv = p[static_cast<std::size_t>(i)](t);
    if (pv == 0) continue;
    const long double hv = (k == i) ? hder(0, z + t, lam) - hder(0, z + 1, lam) : hder(k - i, z + t, lam);
    acc += binom_coefficient(k, i) * pv * hv;
  }
  return acc;
}

void require_positive_z(double z, const char* who) {
  if (!(z > 0)) throw_error(ErrorKind::kDomain, std::string(who) + ": requires z > 0");
}

}  // namespace

QContext::QContext(double q) : q_(q), log_q_(std::log(q)) {
  if (!(q > 0.0 && q < 1.0)) throw_error(ErrorKind::kDomain, "q must satisfy 0 < q < 1, got " + std::to_string(q));
}

double q_number(double z, const QContext& ctx) {
  const double lam = ctx.log_q();
  return std::expm1(lam * z) / std::expm1(lam);
}

std::complex<double> q_number(std::complex<double> z, const QContext& ctx) {
  const double lam = ctx.log_q();
  const std::complex<double> w = lam * z;
  // expm1 for complex w = a + ib: e^a cos b - 1 + i e^a sin b, with the real
  // part rearranged as expm1(a) cos b - 2 sin^2(b/2).
  const double a = w.real(), b = w.imag();
  const double s = std::sin(b / 2);
  const std::complex<double> em1(std::expm1(a) * std::cos(b) - 2 * s * s, std::exp(a) * std::sin(b));
  return em1 / std::expm1(lam);
}

double polylog(int r, double x, double tol) {
  if (r < 1) throw_error(ErrorKind::kDomain, "polylog: order must be positive");
  if (x == 1.0) {
    if (r >= 2) return riemann_zeta(r);
    throw_error(ErrorKind::kDomain, "polylog: Li_1 diverges at x = 1");
  }
  if (!(std::fabs(x) < 1.0)) throw_error(ErrorKind::kDomain, "polylog: requires |x| < 1");
  if (r == 1) return -std::log1p(-x);
  const double ax = std::fabs(x);
  long double acc = 0;
  long double power = 1;
  for (long k = 1;; ++k) {
    power *= x;
    acc += power / std::pow(static_cast<long double>(k), r);
    const long double bound = std::fabs(power) * ax / (std::pow(static_cast<long double>(k + 1), r) * (1 - ax));
    if (bound < tol * std::max(1.0L, std::fabs(acc)) || power == 0) break;
  }
  return static_cast<double>(acc);
}

double big_l(int r, double z, const QContext& ctx) {
  if (r < 1) throw_error(ErrorKind::kDomain, "big_l: order must be positive");
  if (!(z > 0)) throw_error(ErrorKind::kDomain, "big_l: requires z > 0 so that q^z < 1");
  const double lam = ctx.log_q();
  if (r == 1) return static_cast<double>(-log1m_qpow(lam, z));
  return polylog(r, std::exp(lam * z)) / std::pow(lam, r - 1);
}

double q_log_derivative(int s, double x, const QContext& ctx) {
  if (s < 0) throw_error(ErrorKind::kDomain, "q_log_derivative: negative order");
  if (!(x > 0)) throw_error(ErrorKind::kDomain, "q_log_derivative: requires x > 0");
  return static_cast<double>(hder(s, x, ctx.log_q()));
}

Evaluation jackson_q_gamma(double z, const QContext& ctx, long K, double tol) {
  if (!(z > -1)) throw_error(ErrorKind::kDomain, "jackson_q_gamma: requires z > -1");
  const long double lam = ctx.log_q();
  if (K <= 0) {
    K = std::max(1L, static_cast<long>(std::ceil(std::log(tol * (1 - ctx.q())) / lam)));
  }
  const long double a = -std::expm1(lam * z);  // 1 - q^z
  long double acc = -z * log1m_qpow(lam, 1);
  long double mag = std::fabs(acc);
  long double last = 0;
  for (long k = 1; k <= K; ++k) {
    const long double qk = std::exp(lam * k);
    last = std::log1p(qk * a / (-std::expm1(lam * k)));
    acc -= last;
    mag += std::fabs(last);
  }
  Evaluation out;
  out.value = static_cast<double>(acc);
  out.error_estimate = static_cast<double>(std::fabs(last) * ctx.q() / (1 - ctx.q()) + 4 * kEps * mag);
  out.route = Route::kProduct;
  return out;
}

RationalPolynomial moak_polynomial(int n) {
  if (n < 1) throw_error(ErrorKind::kDomain, "moak_polynomial: n must be positive");
  RationalPolynomial p = RationalPolynomial::constant(Rational(1));
  const RationalPolynomial x_minus_x2({Rational(0), Rational(1), Rational(-1)});
  for (int k = 1; k < n; ++k) p = x_minus_x2 * p.derivative() + RationalPolynomial::monomial(Rational(k), 1) * p;
  return p;
}

Evaluation QExpansionTerms::evaluation() const {
  Evaluation e;
  e.value = total();
  e.error_estimate = remainder.error_estimate;
  e.route = Route::kEulerMacLaurin;
  return e;
}

QExpansionTerms q_gamma_expansion(double z, const QContext& ctx, int m) {
  require_positive_z(z, "q_gamma_expansion");
  if (m < 2) throw_error(ErrorKind::kPrecondition, "q_gamma_expansion: requires m >= 2");
  const long double lam = ctx.log_q();
  const long double u = std::exp(lam * z);
  QExpansionTerms terms;
  double error = 0;

  terms.leading = static_cast<double>((z - 0.5L) * std::log(static_cast<long double>(q_number(z, ctx))));

  const Evaluation integral = integrate(
      [lam](double xi) {
        const long double e = lam * xi;
        return static_cast<double>(xi * std::exp(e) / -std::expm1(e));
      },
      1.0, z);
  terms.integral_term = static_cast<double>(lam * integral.value);
  error += std::fabs(static_cast<double>(lam)) * integral.error_estimate;

  // C_1(q) = -log q/12 - log q/(12 (q-1)) + int_0^inf Bbar_2/2 (-h''(t+1)) dt.
  TailIntegrand c1;
  c1.order = 2;
  c1.start = 0.0;
  c1.decay_exponent = 2;
  c1.core = [lam](double t) { return static_cast<double>(-hder(2, t + 1.0L, lam) / 2); };
  c1.derivative = [lam](int k, double t) { return static_cast<double>(-hder(2 + k, t + 1.0L, lam) / 2); };
  c1.derivative_order = kTailDerivatives;
  const Evaluation c1_tail = tail_integral(c1);
  const long double c1_value = -lam / 12 - lam / (12 * std::expm1(lam)) + c1_tail.value;
  terms.constant = static_cast<double>(c1_value + lam / 12);
  error += c1_tail.error_estimate;

  const BernoulliTable& table = BernoulliTable::instance();
  long double bsum = 0;
  const long double ratio = lam / std::expm1(lam * z);  // log q/(q^z - 1)
  for (int k = 1; k <= m; ++k) {
    const long double b = to_long_double(table.number(2 * k)) / to_long_double(factorial(2 * k));
    const auto p = moak_polynomial(2 * k - 1).to_numeric<long double>();
    bsum += b * std::pow(ratio, 2 * k - 1) * p(u);
  }
  terms.bernoulli_sum = static_cast<double>(bsum);

  TailIntegrand rem;
  rem.order = 2 * m;
  rem.start = 0.0;
  rem.decay_exponent = 2;
  rem.core = [lam, z, m](double t) { return static_cast<double>(hder(2 * m, t + static_cast<long double>(z), lam)); };
  rem.derivative = [lam, z, m](int k, double t) {
    return static_cast<double>(hder(2 * m + k, t + static_cast<long double>(z), lam));
  };
  rem.derivative_order = kTailDerivatives;
  const Evaluation r = tail_integral(rem);
  const long double inv = 1 / to_long_double(factorial(2 * m));
  terms.remainder.value = static_cast<double>(inv * r.value);
  terms.remainder.error_estimate =
      static_cast<double>(inv * r.error_estimate) + error +
      4 * kEps * (std::fabs(terms.leading) + std::fabs(terms.integral_term) + std::fabs(terms.constant) +
                  std::fabs(terms.bernoulli_sum));
  terms.remainder.route = Route::kQuadrature;
  return terms;
}

Evaluation q_multigamma_product(int n, double z, const QContext& ctx, long K, double tol) {
  if (n < 0) throw_error(ErrorKind::kDomain, "q_multigamma_product: n must be nonnegative");
  if (!(z > -1)) throw_error(ErrorKind::kDomain, "q_multigamma_product: requires z > -1");
  Evaluation out;
  out.route = Route::kProduct;
  if (n == 0) {
    out.value = std::log(q_number(z + 1, ctx));
    out.error_estimate = 2 * kEps * std::fabs(out.value);
    return out;
  }
  const long double lam = ctx.log_q();
  const long double q = ctx.q();
  const long double a = -std::expm1(lam * z);  // 1 - q^z
  const long double log1mq = log1m_qpow(lam, 1);
  long double acc = -binom_value(z, n) * log1mq;
  long double mag = std::fabs(acc);
  // Past the peak of k^{n-1} q^k the terms decay monotonically.
  const long double peak = (n - 1) / -lam + 1;
  const bool automatic = K <= 0;
  long double bound = 0;
  for (long k = 1;; ++k) {
    if (!automatic && k > K) break;
    const long double qk = std::exp(lam * k);
    const long double om = -std::expm1(lam * k);
    const long double e = binom_value(-static_cast<long double>(k), n - 1);
    const long double g = binom_value(z - k, n - 1) - e;
    const long double term = -e * std::log1p(qk * a / om) + g * log1m_qpow(lam, k);
    acc += term;
    mag += std::fabs(term);
    bound = (std::fabs(e) * (1 + std::fabs(a)) + std::fabs(g)) * qk * q / (om * (1 - q));
    if (automatic && k > peak && bound < tol * std::max(1.0L, std::fabs(acc))) break;
    if (k > 100000000L) throw_error(ErrorKind::kNumeric, "q_multigamma_product: product does not converge");
  }
  out.value = static_cast<double>(acc);
  out.error_estimate = static_cast<double>(bound + 4 * kEps * mag);
  return out;
}

Evaluation q_cj_constant(int j, int order, const QContext& ctx) {
  if (j < 0) throw_error(ErrorKind::kDomain, "q_cj_constant: negative index");
  if (order < j + 2) throw_error(ErrorKind::kPrecondition, "q_cj_constant: order must be at least j+2");
  const long double lam = ctx.log_q();
  // (d/dt)^k { t^j [h(t) - h(1)] }.
  auto fder = [j, lam](int k, long double t) {
    long double acc = 0;
    long double falling = 1;
    for (int i = 0; i <= std::min(k, j); ++i) {
      if (i > 0) falling *= (j - i + 1);
      const long double hv = (k == i) ? hder(0, t, lam) - hder(0, 1, lam) : hder(k - i, t, lam);
      acc += binom_coefficient(k, i) * falling * std::pow(t, j - i) * hv;
    }
    return acc;
  };
  const BernoulliTable& table = BernoulliTable::instance();
  long double boundary = 0;
  long double inv_fact = 1;
  for (int r = 1; r <= order; ++r) {
    inv_fact /= r;
    boundary -= to_long_double(table.number(r)) * inv_fact * fder(r - 1, 1);
  }
  TailIntegrand g;
  g.order = order;
  g.decay_exponent = std::max(2, order - j);
  g.core = [=](double t) { return static_cast<double>(fder(order, t)); };
  g.derivative = [=](int k, double t) { return static_cast<double>(fder(order + k, t)); };
  g.derivative_order = kTailDerivatives;
  const Evaluation tail = tail_integral(g);
  const long double sign = (order - 1) % 2 == 0 ? 1.0L : -1.0L;
  Evaluation out;
  out.value = static_cast<double>(boundary + sign * inv_fact * tail.value);
  out.error_estimate = static_cast<double>(inv_fact * tail.error_estimate) + 4 * kEps * std::fabs(out.value);
  out.route = Route::kQuadrature;
  return out;
}

QExpansionTerms q_multigamma_expansion(int n, double z, const QContext& ctx, int m) {
  if (n < 1) throw_error(ErrorKind::kDomain, "q_multigamma_expansion: n must be positive");
  if (m <= n) throw_error(ErrorKind::kPrecondition, "q_multigamma_expansion: requires m > n");
  if (!(z > -1)) throw_error(ErrorKind::kDomain, "q_multigamma_expansion: requires z > -1");
  const long double lam = ctx.log_q();
  const Rational zr = to_rational(z);
  const BernoulliTable& table = BernoulliTable::instance();
  QExpansionTerms terms;
  double error = 0;

  // Coefficient of log [z+1].
  RationalPolynomial prefactor = binom_poly(n).compose_linear(Rational(1), Rational(1));
  for (int r = 1; r <= n; ++r) prefactor += binom_deriv_poly(n, r) * (table.number(r) / factorial(r));
  terms.leading = static_cast<double>(to_long_double(prefactor(zr)) * std::log(static_cast<long double>(q_number(z + 1, ctx))));

  long double integral_sum = 0;
  for (int r = 1; r <= n; ++r) {
    const long double d = to_long_double(binom_deriv_poly(n, r)(zr));
    if (d == 0) continue;
    const long double rf = to_long_double(factorial(r));
    const Evaluation q = integrate(
        [lam, r, rf](double xi) {
          return static_cast<double>(std::pow(static_cast<long double>(xi), r) / rf * -hder(1, xi, lam));
        },
        1.0, z + 1.0);
    integral_sum += d * q.value;
    error += static_cast<double>(std::fabs(d)) * q.error_estimate;
  }
  terms.integral_term = static_cast<double>(integral_sum);

  const auto gnj = gnj_coefficients(n);
  long double constant = 0;
  for (int j = 0; j < n; ++j) {
    const long double g = to_long_double(gnj[static_cast<std::size_t>(j)](zr));
    if (g == 0) continue;
    const Evaluation c = q_cj_constant(j, n + 1, ctx);
    constant += g * c.value;
    error += static_cast<double>(std::fabs(g)) * c.error_estimate;
  }
  terms.constant = static_cast<double>(constant);

  const auto p = neg_binom_derivatives(n);
  const long double zl = z;
  long double bsum = 0;
  long double inv_fact = 1;
  for (int r = 1; r <= m; ++r) {
    inv_fact /= r;
    if (r == 1) continue;  // F_{n,0} = 0
    const Rational& b = table.number(r);
    if (b == 0) continue;
    bsum += to_long_double(b) * inv_fact * product_log_derivative(p, r - 1, 1.0L, zl, lam);
  }
  terms.bernoulli_sum = static_cast<double>(bsum);

  TailIntegrand rem;
  rem.order = m;
  rem.decay_exponent = 2;
  rem.core = [p, m, zl, lam](double t) { return static_cast<double>(product_log_derivative(p, m, t, zl, lam)); };
  rem.derivative = [p, m, zl, lam](int k, double t) {
    return static_cast<double>(product_log_derivative(p, m + k, t, zl, lam));
  };
  rem.derivative_order = kTailDerivatives;
  const Evaluation r = tail_integral(rem);
  // R = (-1)^{m-1}/m! * integral, and the expansion subtracts R.
  const long double sign = (m - 1) % 2 == 0 ? 1.0L : -1.0L;
  terms.remainder.value = static_cast<double>(-sign * inv_fact * r.value);
  terms.remainder.error_estimate =
      static_cast<double>(inv_fact * r.error_estimate) + error +
      4 * kEps * (std::fabs(terms.leading) + std::fabs(terms.integral_term) + std::fabs(terms.constant) +
                  std::fabs(terms.bernoulli_sum));
  terms.remainder.route = Route::kQuadrature;
  return terms;
}

Evaluation q_multigamma(int n, double z, const QContext& ctx, double tol) {
  if (n >= 1 && ctx.q() > 0.999) {
    Evaluation e = q_multigamma_expansion(n, z, ctx, n + 4).evaluation();
    return e;
  }
  return q_multigamma_product(n, z, ctx, 0, std::min(tol, 1e-15));
}

}  // namespace multigamma
