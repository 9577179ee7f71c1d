// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/multigamma_core.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <mutex>
#include <string>

#include "multigamma/combinatorics.hpp"
#include "multigamma/errors.hpp"
#include "multigamma/quadrature.hpp"
#include "multigamma/zeta_constants.hpp"

namespace multigamma {

namespace {

using cld = std::complex<long double>;

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kLongEps = std::numeric_limits<long double>::epsilon();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kRemainderDerivatives = 40;
constexpr int kLaurentTerms = 40;
constexpr long kMaxShift = 10000000;

void check_level(int n, int lowest = 1) {
  if (n < lowest) throw_error(ErrorKind::kDomain, "level n=" + std::to_string(n) + " below " + std::to_string(lowest));
  if (n > kMaxLevel) {
    throw_error(ErrorKind::kOrderTooLarge, "level n=" + std::to_string(n) + " above " + std::to_string(kMaxLevel));
  }
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool is_pole(std::complex<double> z) { return z.imag() == 0.0 && z.real() <= -1.0 && z.real() == std::floor(z.real()); }

// binom(-t, n-1) as a polynomial in t.
RationalPolynomial neg_binom_poly(int n) { return binom_poly(n - 1).compose_linear(Rational(-1), Rational(0)); }

RationalPolynomial power_poly(const RationalPolynomial& base, int e) {
  RationalPolynomial out = RationalPolynomial::constant(Rational(1));
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

template <typename T, typename X>
X eval_poly(const std::vector<T>& c, const X& x) {
  X acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + X(*it);
  return acc;
}

// Numeric image of a StirlingExpansion with zeta'(-j) substituted.
struct NumericSeries {
  NumericPolynomial<long double> log_poly;
  std::vector<long double> alg;  // coefficients in z
  std::vector<std::vector<long double>> rows;  // weight * inverse_powers
};

std::vector<long double> to_long(const RationalPolynomial& p) {
  std::vector<long double> out;
  for (const auto& c : p.coefficients()) out.push_back(to_long_double(c));
  return out;
}

NumericSeries build_numeric(const StirlingExpansion& e) {
  NumericSeries s;
  s.log_poly = e.log_poly.to_numeric<long double>();
  s.alg = to_long(e.alg_poly);
  for (std::size_t j = 0; j < e.zeta_prime_polys.size(); ++j) {
    const std::vector<long double> c = to_long(e.zeta_prime_polys[j]);
    if (c.size() > s.alg.size()) s.alg.resize(c.size());
    const long double zp = zeta_prime_neg(static_cast<int>(j));
    for (std::size_t i = 0; i < c.size(); ++i) s.alg[i] += c[i] * zp;
  }
  for (const BernoulliRow& row : e.bernoulli_terms) {
    std::vector<long double> c;
    for (const auto& x : row.inverse_powers) c.push_back(to_long_double(x * row.weight));
    s.rows.push_back(std::move(c));
  }
  return s;
}

const NumericSeries& numeric_series(int n) {
  static std::array<std::once_flag, kMaxLevel + 1> flags;
  static std::array<NumericSeries, kMaxLevel + 1> cache;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] { cache[static_cast<std::size_t>(n)] = build_numeric(stirling_coefficients(n)); });
  return cache[static_cast<std::size_t>(n)];
}

struct SeriesValue {
  cld value;
  long double error;
  long double magnitude;  // largest partial magnitude, for rounding
};

// rows < 0 picks the truncation adaptively: stop once a row drops below
// the rounding level or the rows start to grow.
SeriesValue series_at(int n, cld z, int rows) {
  const NumericSeries& s = numeric_series(n);
  const cld lz = std::log(z + 1.0L);
  const cld head = s.log_poly(z) * lz;
  const cld alg = eval_poly(s.alg, z);
  cld value = head + alg;
  long double magnitude = std::max(std::abs(head), std::abs(alg));
  const cld w = 1.0L / (z + 1.0L);
  const int available = static_cast<int>(s.rows.size());
  auto row = [&](int r) { return eval_poly(s.rows[static_cast<std::size_t>(r - 1)], w); };
  if (rows >= 0) {
    if (rows >= available) {
      throw_error(ErrorKind::kOrderTooLarge, "truncation R=" + std::to_string(rows) + " needs more than " +
                                                  std::to_string(available) + " Bernoulli rows");
    }
    for (int r = 1; r <= rows; ++r) value += row(r);
    return {value, std::abs(row(rows + 1)), std::max(magnitude, std::abs(value))};
  }
  long double previous = std::numeric_limits<long double>::infinity();
  for (int r = 1; r <= available; ++r) {
    const cld t = row(r);
    const long double a = std::abs(t);
    if (a > previous) return {value, a, std::max(magnitude, std::abs(value))};
    if (a <= kLongEps * std::abs(value) / 16) {
      value += t;
      return {value, a, std::max(magnitude, std::abs(value))};
    }
    value += t;
    previous = a;
  }
  return {value, previous, std::max(magnitude, std::abs(value))};
}

void check_sector(std::complex<double> z, double delta) {
  if (!(delta > 0 && delta < kPi)) throw_error(ErrorKind::kDomain, "sector half-angle must lie in (0, pi)");
  if (z != 0.0 && std::fabs(std::arg(z)) >= kPi - delta) {
    throw_error(ErrorKind::kDomain, "z=" + format_number(z.real()) + "+" + format_number(z.imag()) +
                                        "i lies outside the asymptotic sector");
  }
}

// Derivatives of f(t) = binom(-t, n-1) log((z+t)/(z+1)).
class RemainderFunction {
 public:
  RemainderFunction(int n, long double z) : n_(n), z_(z) {
    RationalPolynomial p = neg_binom_poly(n);
    for (int i = 0; i < n; ++i) {
      pder_.push_back(p.to_numeric<long double>());
      p = p.derivative();
    }
  }

  long double operator()(int k, long double t) const {
    long double acc = 0;
    long double binom = 1;  // binom(k, i)
    const long double x = z_ + t;
    for (int i = 0; i <= std::min(k, n_ - 1); ++i) {
      const int s = k - i;
      long double log_part;
      if (s == 0) {
        log_part = std::log1p((t - 1) / (z_ + 1));
      } else {
        // (-1)^{s-1} (s-1)! / x^s
        long double f = 1;
        for (int a = 2; a < s; ++a) f *= a;
        log_part = ((s - 1) % 2 == 0 ? f : -f) / std::pow(x, s);
      }
      acc += binom * pder_[static_cast<std::size_t>(i)](t) * log_part;
      binom = binom * (k - i) / (i + 1);
    }
    return acc;
  }

 private:
  int n_;
  long double z_;
  std::vector<NumericPolynomial<long double>> pder_;
};

RationalPolynomial build_qj(int j) {
  const RationalPolynomial z = RationalPolynomial::identity();
  const RationalPolynomial& pj = pj_polynomial(j);
  RationalPolynomial q = pj.compose_linear(Rational(1), Rational(1));
  for (int r = 0; r <= j; ++r) {
    q -= binomial(j, r) * pj_polynomial(j - r)(Rational(1)) * power_poly(z, r);
  }
  const BernoulliTable& table = BernoulliTable::instance();
  RationalPolynomial outer;
  for (int r = 1; r <= j + 1; ++r) {
    RationalPolynomial alternating;  // sum_{l=1}^r (-1)^{l-1} z^l / l
    for (int l = 1; l <= r; ++l) {
      alternating += RationalPolynomial::monomial(Rational((l % 2 == 1) ? 1 : -1, l), l);
    }
    outer += binomial(j + 1, r) * table.polynomial(j + 1 - r) * alternating;
  }
  q += Rational(1, j + 1) * outer;
  return q;
}

WeierstrassForm build_weierstrass(int n) {
  WeierstrassForm form;
  form.n = n;
  const std::vector<RationalPolynomial> g = gnj_coefficients(n);
  const RationalPolynomial z = RationalPolynomial::identity();
  for (int j = 0; j < n; ++j) form.prefactor_poly += g[static_cast<std::size_t>(j)] * qj_polynomial(j);
  // [(1/r!) d^r/du^r binom(z-u, n-1)] from u = 0 to u = z.
  for (int r = 0; r <= n - 2; ++r) {
    RationalPolynomial at_z;
    for (int j = r; j < n; ++j) at_z += binomial(j, r) * g[static_cast<std::size_t>(j)] * power_poly(z, j - r);
    form.zeta_prime_polys.push_back(at_z - g[static_cast<std::size_t>(r)]);
  }
  form.gamma_poly = -binom_poly(n - 1).antiderivative();
  form.exponent_poly = -neg_binom_poly(n);
  const RationalPolynomial stirling = stirling_first(n - 1);
  const Rational inv_fact = Rational(1) / factorial(n - 1);
  for (int mu = -1; mu <= n - 2; ++mu) {
    RationalPolynomial c;
    for (int r = mu + 1; r <= n - 1; ++r) {
      c += RationalPolynomial::monomial(stirling.coefficient(static_cast<std::size_t>(r)) / (r - mu), r - mu);
    }
    form.phi_coeffs.push_back(((mu + 1) % 2 == 0 ? inv_fact : Rational(-inv_fact)) * c);
  }
  return form;
}

struct NumericWeierstrass {
  std::vector<long double> prefactor;  // constants substituted
  std::vector<long double> exponent;
  std::vector<std::vector<long double>> phi;
};

const NumericWeierstrass& numeric_weierstrass(int n) {
  static std::array<std::once_flag, kMaxLevel + 1> flags;
  static std::array<NumericWeierstrass, kMaxLevel + 1> cache;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] {
    const WeierstrassForm& f = weierstrass_form(n);
    NumericWeierstrass w;
    RationalPolynomial pre = f.prefactor_poly;
    w.prefactor = to_long(pre);
    auto accumulate = [&w](const RationalPolynomial& p, long double c) {
      const std::vector<long double> v = to_long(p);
      if (v.size() > w.prefactor.size()) w.prefactor.resize(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w.prefactor[i] += v[i] * c;
    };
    for (std::size_t r = 0; r < f.zeta_prime_polys.size(); ++r) {
      accumulate(f.zeta_prime_polys[r], zeta_prime_neg(static_cast<int>(r)));
    }
    accumulate(f.gamma_poly, euler_gamma());
    w.exponent = to_long(f.exponent_poly);
    for (const auto& p : f.phi_coeffs) w.phi.push_back(to_long(p));
    cache[static_cast<std::size_t>(n)] = std::move(w);
  });
  return cache[static_cast<std::size_t>(n)];
}

// sum_k k^-d for k >= a, a large.
long double hurwitz_tail(int d, long double a) {
  return std::pow(a, 1 - d) / (d - 1) + std::pow(a, -d) / 2 + d * std::pow(a, -d - 1) / 12;
}

}  // namespace

std::vector<Rational> f_n_inverse_powers(int n, int k) {
  check_level(n);
  if (k < 0) throw_error(ErrorKind::kPrecondition, "derivative order must be nonnegative");
  std::vector<Rational> out(static_cast<std::size_t>(k) + 1);
  RationalPolynomial p = neg_binom_poly(n);
  for (int i = 0; i <= std::min(k - 1, n - 1); ++i) {
    const int s = k - i;
    Rational f = factorial(s - 1);
    if ((s - 1) % 2 == 1) f = -f;
    out[static_cast<std::size_t>(s)] += binomial(k, i) * p(Rational(1)) * f;
    p = p.derivative();
  }
  return out;
}

double f_n_remainder_terms(int n, int r, double z) {
  if (r < 1) throw_error(ErrorKind::kPrecondition, "row index r must be >= 1");
  if (z <= -1) throw_error(ErrorKind::kDomain, "z must exceed -1");
  const std::vector<Rational> c = f_n_inverse_powers(n, r - 1);
  std::vector<long double> v;
  for (const auto& x : c) v.push_back(to_long_double(x));
  return static_cast<double>(eval_poly(v, 1.0L / (static_cast<long double>(z) + 1)));
}

const StirlingExpansion& stirling_coefficients(int n) {
  check_level(n);
  static std::array<std::once_flag, kMaxLevel + 1> flags;
  static std::array<StirlingExpansion, kMaxLevel + 1> cache;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] {
    const BernoulliTable& table = BernoulliTable::instance();
    StirlingExpansion e;
    e.n = n;
    e.log_poly = binom_poly(n).compose_linear(Rational(1), Rational(1));
    const RationalPolynomial zp1({Rational(1), Rational(1)});
    for (int r = 1; r <= n; ++r) {
      const RationalPolynomial d = binom_deriv_poly(n, r);
      e.log_poly += table.number(r) / factorial(r) * d;
      const Rational scale = Rational(1) / (factorial(r) * r);
      e.alg_poly -= scale * d * (power_poly(zp1, r) - RationalPolynomial::constant(Rational(1)));
    }
    const std::vector<RationalPolynomial> g = gnj_coefficients(n);
    for (int j = 0; j < n; ++j) {
      e.alg_poly -= Rational(1, (j + 1) * (j + 1)) * g[static_cast<std::size_t>(j)];
      e.zeta_prime_polys.push_back(-g[static_cast<std::size_t>(j)]);
    }
    for (int r = 1; r <= kMaxStirlingRows; ++r) {
      BernoulliRow row;
      row.index = 2 * r;
      row.weight = table.number(2 * r) / factorial(2 * r);
      row.inverse_powers = f_n_inverse_powers(n, 2 * r - 1);
      e.bernoulli_terms.push_back(std::move(row));
    }
    e.remainder_order = 2 * kMaxStirlingRows + 2;
    cache[static_cast<std::size_t>(n)] = std::move(e);
  });
  return cache[static_cast<std::size_t>(n)];
}

Evaluation em_remainder(int n, double z, int m) {
  check_level(n);
  if (!(z > -1)) throw_error(ErrorKind::kDomain, "z=" + format_number(z) + " must exceed -1");
  if (m <= n) throw_error(ErrorKind::kPrecondition, "order m=" + std::to_string(m) + " must exceed n");
  if (m >= kBernoulliCapacity) throw_error(ErrorKind::kOrderTooLarge, "order m too large for the Bernoulli table");
  auto f = std::make_shared<RemainderFunction>(n, z);
  TailIntegrand g;
  g.order = m;
  g.core = [f, m](double t) { return static_cast<double>((*f)(m, t)); };
  g.decay_exponent = m - n + 1;
  g.derivative = [f, m](int j, double t) { return static_cast<double>((*f)(m + j, t)); };
  g.derivative_order = std::min(kRemainderDerivatives, kBernoulliCapacity - m - 1);
  g.start = 1.0;
  const Evaluation integral = tail_integral(g);
  const double inv_fact = 1.0 / to_double(factorial(m));
  Evaluation out;
  out.value = ((m - 1) % 2 == 0 ? 1.0 : -1.0) * inv_fact * integral.value;
  out.error_estimate = inv_fact * integral.error_estimate;
  out.route = Route::kQuadrature;
  return out;
}

Evaluation multigamma_em(int n, double z, int m) {
  const Evaluation r = em_remainder(n, z, m);
  const NumericSeries& s = numeric_series(n);
  const long double zl = z;
  const long double head = s.log_poly(zl) * std::log1p(zl);
  const long double alg = eval_poly(s.alg, zl);
  long double value = head + alg;
  long double magnitude = std::max(std::fabs(head), std::fabs(alg));
  const long double w = 1 / (zl + 1);
  for (int r2 = 2; r2 <= m; r2 += 2) {
    const long double t = eval_poly(s.rows[static_cast<std::size_t>(r2 / 2 - 1)], w);
    value += t;
    magnitude = std::max(magnitude, std::fabs(value));
  }
  value -= r.value;
  Evaluation out;
  out.value = static_cast<double>(value);
  out.error_estimate = r.error_estimate + 8 * kEps * static_cast<double>(magnitude);
  out.route = Route::kEulerMacLaurin;
  return out;
}

ComplexEvaluation higher_stirling(int n, std::complex<double> z, int R, double delta) {
  check_level(n);
  if (R < 0) throw_error(ErrorKind::kPrecondition, "truncation R must be nonnegative");
  check_sector(z, delta);
  const SeriesValue v = series_at(n, cld(z.real(), z.imag()), R);
  ComplexEvaluation out;
  out.value = std::complex<double>(static_cast<double>(v.value.real()), static_cast<double>(v.value.imag()));
  out.error_estimate = static_cast<double>(v.error) + 4 * kEps * static_cast<double>(v.magnitude) * kLongEps / kEps;
  out.route = Route::kAsymptotic;
  return out;
}

Evaluation higher_stirling(int n, double z, int R) {
  if (z <= -1) throw_error(ErrorKind::kDomain, "z=" + format_number(z) + " must exceed -1");
  const ComplexEvaluation c = higher_stirling(n, std::complex<double>(z, 0.0), R);
  return {c.value.real(), c.error_estimate, c.route};
}

ComplexEvaluation eval_log_multigamma(int n, std::complex<double> z, double tol) {
  check_level(n, 0);
  (void)tol;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw_error(ErrorKind::kDomain, "z must be finite");
  if (is_pole(z)) throw_error(ErrorKind::kPole, "pole at z=" + format_number(z.real()));
  const cld zl(z.real(), z.imag());
  if (n == 0) {
    const cld v = std::log(zl + 1.0L);
    return {std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag())),
            kEps * static_cast<double>(std::abs(v)), Route::kRecurrence};
  }
  const long double limit = kPi - kDefaultSectorDelta;
  auto ready = [&](long S) {
    const cld w = zl + static_cast<long double>(S);
    return std::abs(w) >= kShiftThreshold && (w == 0.0L || std::fabs(std::arg(w)) < limit);
  };
  long S = 0;
  if (!ready(0)) {
    S = std::max(0L, static_cast<long>(std::ceil(-z.real())));
    while (!ready(S)) ++S;
    if (S > kMaxShift) throw_error(ErrorKind::kDomain, "z=" + format_number(z.real()) + " needs too long a shift");
  }
  // cur[j] = log G_j at z + k + 1, walked down from k = S.
  std::vector<cld> cur(static_cast<std::size_t>(n) + 1);
  std::vector<long double> err(static_cast<std::size_t>(n) + 1, 0.0L);
  std::vector<long double> mag(static_cast<std::size_t>(n) + 1, 0.0L);
  const cld top = zl + static_cast<long double>(S);
  cur[0] = std::log(top + 1.0L);
  mag[0] = std::abs(cur[0]);
  for (int j = 1; j <= n; ++j) {
    const SeriesValue v = series_at(j, top, -1);
    cur[static_cast<std::size_t>(j)] = v.value;
    err[static_cast<std::size_t>(j)] = v.error;
    mag[static_cast<std::size_t>(j)] = v.magnitude;
  }
  for (long k = S - 1; k >= 0; --k) {
    const cld w = zl + static_cast<long double>(k);
    cur[0] = std::log(w + 1.0L);
    mag[0] = std::abs(cur[0]);
    err[0] = 0;
    for (int j = 1; j <= n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      cur[uj] -= cur[uj - 1];
      err[uj] += err[uj - 1];
      mag[uj] = std::max(mag[uj], std::abs(cur[uj])) + mag[uj - 1];
    }
  }
  const auto un = static_cast<std::size_t>(n);
  ComplexEvaluation out;
  out.value = std::complex<double>(static_cast<double>(cur[un].real()), static_cast<double>(cur[un].imag()));
  out.error_estimate = static_cast<double>(err[un] + 8 * kLongEps * mag[un]) + kEps * std::abs(out.value);
  out.route = S == 0 ? Route::kAsymptotic : Route::kRecurrence;
  return out;
}

Evaluation eval_log_multigamma(int n, double z, double tol) {
  const ComplexEvaluation c = eval_log_multigamma(n, std::complex<double>(z, 0.0), tol);
  return {c.value.real(), c.error_estimate, c.route};
}

double kj_series(int j, double z, long K) {
  if (j < 0 || j > kMaxZetaPrimeIndex) throw_error(ErrorKind::kDomain, "index j out of range");
  if (!(z > -1)) throw_error(ErrorKind::kDomain, "z=" + format_number(z) + " must exceed -1");
  if (K < 0) throw_error(ErrorKind::kPrecondition, "K must be nonnegative");
  const long double zl = z;
  const BernoulliTable& table = BernoulliTable::instance();
  const long double b = to_long_double(table.polynomial(j + 1)(to_rational(z + 1))) / (j + 1);
  long double acc = b * std::log1p(zl) - zeta_prime_neg(j) + pj_polynomial(j).to_numeric<long double>()(zl + 1);
  for (long k = 1; k <= K; ++k) acc += zeta_product_summand(j, zl + k);
  return static_cast<double>(acc);
}

const RationalPolynomial& qj_polynomial(int j) {
  if (j < 0 || j > kMaxZetaPrimeIndex) throw_error(ErrorKind::kDomain, "index j out of range");
  static std::array<std::once_flag, kMaxZetaPrimeIndex + 1> flags;
  static std::array<RationalPolynomial, kMaxZetaPrimeIndex + 1> cache;
  std::call_once(flags[static_cast<std::size_t>(j)], [j] { cache[static_cast<std::size_t>(j)] = build_qj(j); });
  return cache[static_cast<std::size_t>(j)];
}

const WeierstrassForm& weierstrass_form(int n) {
  check_level(n);
  static std::array<std::once_flag, kMaxLevel + 1> flags;
  static std::array<WeierstrassForm, kMaxLevel + 1> cache;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] { cache[static_cast<std::size_t>(n)] = build_weierstrass(n); });
  return cache[static_cast<std::size_t>(n)];
}

Rational phi_n(int n, const Rational& z, long k) {
  if (k < 1) throw_error(ErrorKind::kPrecondition, "k must be >= 1");
  const WeierstrassForm& f = weierstrass_form(n);
  Rational acc = 0;
  for (int mu = -1; mu <= n - 2; ++mu) {
    Rational kp = 1;
    if (mu < 0) {
      kp = Rational(1, k);
    } else {
      for (int i = 0; i < mu; ++i) kp *= k;
    }
    acc += f.phi_coeffs[static_cast<std::size_t>(mu + 1)](z) * kp;
  }
  return acc;
}

double phi_n(int n, double z, long k) {
  if (k < 1) throw_error(ErrorKind::kPrecondition, "k must be >= 1");
  check_level(n);
  const NumericWeierstrass& w = numeric_weierstrass(n);
  const long double kl = k;
  long double acc = 0;
  for (int mu = n - 2; mu >= -1; --mu) acc = acc * kl + eval_poly(w.phi[static_cast<std::size_t>(mu + 1)], (long double)z);
  return static_cast<double>(acc / kl);
}

ComplexEvaluation weierstrass_log(int n, std::complex<double> z, long K) {
  check_level(n);
  if (K < 0) throw_error(ErrorKind::kPrecondition, "K must be nonnegative");
  if (z.imag() == 0.0 && z.real() <= -1) {
    throw_error(ErrorKind::kDomain, "z=" + format_number(z.real()) + " is on the branch cut of the product");
  }
  const NumericWeierstrass& w = numeric_weierstrass(n);
  const cld zl(z.real(), z.imag());
  cld acc = eval_poly(w.prefactor, zl);
  long double magnitude = std::abs(acc);
  const long double az = std::abs(zl);
  const long k_switch = std::max(64L, static_cast<long>(std::ceil(8 * az)));
  // Laurent data of the summand in 1/k: sum_{d>=2} c_d k^-d.
  std::vector<cld> c(static_cast<std::size_t>(kLaurentTerms) + 1);
  std::vector<cld> zpow(static_cast<std::size_t>(n + kLaurentTerms) + 1);
  zpow[0] = 1;
  for (std::size_t e = 1; e < zpow.size(); ++e) zpow[e] = zpow[e - 1] * zl;
  for (int d = 2; d <= kLaurentTerms; ++d) {
    cld s = 0;
    for (std::size_t i = 0; i < w.exponent.size(); ++i) {
      const int e = static_cast<int>(i) + d;
      s += w.exponent[i] * ((e % 2 == 1) ? 1.0L : -1.0L) * zpow[static_cast<std::size_t>(e)] / static_cast<long double>(e);
    }
    c[static_cast<std::size_t>(d)] = s;
  }
  auto summand = [&](long k) {
    const long double kl = k;
    if (k < k_switch) {
      const long double ex = eval_poly(w.exponent, kl);
      cld phi = 0;
      for (int mu = n - 2; mu >= -1; --mu) phi = phi * kl + eval_poly(w.phi[static_cast<std::size_t>(mu + 1)], zl);
      return ex * std::log(1.0L + zl / kl) + phi / kl;
    }
    const long double x = 1 / kl;
    cld s = 0;
    for (int d = kLaurentTerms; d >= 2; --d) s = (s + c[static_cast<std::size_t>(d)]) * x;
    return s * x;
  };
  for (long k = 1; k <= K; ++k) {
    acc += summand(k);
    magnitude = std::max(magnitude, std::abs(acc));
  }
  cld tail = 0;
  for (long k = K + 1; k < k_switch; ++k) tail += summand(k);
  const long double a = static_cast<long double>(std::max(K + 1, k_switch));
  for (int d = 2; d <= kLaurentTerms; ++d) tail += c[static_cast<std::size_t>(d)] * hurwitz_tail(d, a);
  ComplexEvaluation out;
  out.value = std::complex<double>(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  out.error_estimate = static_cast<double>(std::abs(tail) + (8 + 1e-3L * K) * kLongEps * magnitude) +
                       kEps * std::abs(out.value);
  out.route = Route::kWeierstrass;
  return out;
}

Evaluation weierstrass_log(int n, double z, long K) {
  const ComplexEvaluation c = weierstrass_log(n, std::complex<double>(z, 0.0), K);
  return {c.value.real(), c.error_estimate, c.route};
}

}  // namespace multigamma
