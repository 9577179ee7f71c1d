// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/zeta_constants.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "multigamma/combinatorics.hpp"
#include "multigamma/errors.hpp"
#include "multigamma/quadrature.hpp"

namespace multigamma {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr int kLaurentTerms = 40;
constexpr long double kLaurentThreshold = 8.0L;

void check_j(int j) {
  if (j < 0 || j > kMaxZetaPrimeIndex) {
    throw_error(ErrorKind::kDomain, "index j=" + std::to_string(j) + " outside 0.." + std::to_string(kMaxZetaPrimeIndex));
  }
}

// Euler-MacLaurin continuation of sum k^-s with head N and the Bernoulli
// series in N^{-s-2r+1}; returns zeta(s) or, with derivative set, zeta'(s).
long double zeta_em(long double s, int N, bool derivative) {
  const BernoulliTable& table = BernoulliTable::instance();
  const long double logN = std::log(static_cast<long double>(N));
  long double sum = 0;
  for (int k = 1; k < N; ++k) {
    const long double lk = std::log(static_cast<long double>(k));
    const long double term = std::exp(-s * lk);
    sum += derivative ? -lk * term : term;
  }
  const long double n1s = std::exp((1 - s) * logN);
  const long double ns = std::exp(-s * logN);
  if (derivative) {
    sum += -logN * n1s / (s - 1) - n1s / ((s - 1) * (s - 1)) - logN * ns / 2;
  } else {
    sum += n1s / (s - 1) + ns / 2;
  }
  long double inv_fact = 1;  // 1/(2r)!
  long double poch = s;      // s(s+1)...(s+2r-2)
  long double dpoch = 1;     // its derivative in s
  for (int r = 1; 2 * r <= table.capacity(); ++r) {
    if (r > 1) {
      for (int i = 2 * r - 3; i <= 2 * r - 2; ++i) {
        dpoch = dpoch * (s + i) + poch;
        poch *= (s + i);
      }
    }
    inv_fact /= static_cast<long double>((2 * r - 1) * (2 * r));
    const long double b = to_long_double(table.number(2 * r)) * inv_fact;
    const long double pw = std::exp((-s - 2 * r + 1) * logN);
    const long double term = derivative ? b * (dpoch - logN * poch) * pw : b * poch * pw;
    sum += term;
    if (std::fabs(term) < 1e-22L * std::max(1.0L, std::fabs(sum)) && r > 3) break;
  }
  return sum;
}

// (d/dt)^k of t^a log t, a a nonnegative integer.
long double tpow_log_derivative(int a, int k, long double t) {
  long double total = 0;
  long double binom = 1;    // C(k, i)
  long double falling = 1;  // a(a-1)...(a-i+1)
  for (int i = 0; i <= k; ++i) {
    if (i > 0) {
      binom = binom * (k - i + 1) / i;
      falling *= (a - i + 1);
    }
    if (falling == 0) break;
    const int s = k - i;
    long double log_part;
    if (s == 0) {
      log_part = std::log(t);
    } else {
      long double f = 1;
      for (int l = 2; l < s; ++l) f *= l;
      log_part = ((s - 1) % 2 == 0 ? f : -f) / std::pow(t, s);
    }
    total += binom * falling * std::pow(t, a - i) * log_part;
  }
  return total;
}

struct ProductTables {
  std::vector<RationalPolynomial> pj;
  std::vector<NumericPolynomial<long double>> difference;  // P_j(w+1) - P_j(w)
  std::vector<NumericPolynomial<long double>> weight;      // B_{j+1}(w+1)/(j+1)
  std::vector<std::vector<long double>> laurent;           // [e] multiplies w^-e, e >= 1
};

const ProductTables& product_tables() {
  static const ProductTables tables = [] {
    ProductTables t;
    const BernoulliTable& bt = BernoulliTable::instance();
    for (int j = 0; j <= kMaxZetaPrimeIndex; ++j) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(j) + 2);
      Rational inv_fact = 1;
      for (int r = 0; r <= j + 1; ++r) {
        if (r > 0) inv_fact /= r;
        coeffs[static_cast<std::size_t>(j - r + 1)] = bt.number(r) * inv_fact * phi_coefficient(j, r);
      }
      RationalPolynomial p(std::move(coeffs));
      const RationalPolynomial diff = p.compose_linear(Rational(1), Rational(1)) - p;
      const RationalPolynomial w =
          bt.polynomial(j + 1).compose_linear(Rational(1), Rational(1)) * (Rational(1) / (j + 1));
      // log(1 + 1/w) = sum_{l>=1} (-1)^{l-1} / (l w^l); the product with the
      // weight polynomial cancels against diff in the nonnegative powers.
      std::vector<long double> laurent(kLaurentTerms + 1, 0.0L);
      for (int e = 1; e <= kLaurentTerms; ++e) {
        Rational a = 0;
        for (int i = 0; i <= w.degree(); ++i) {
          const int l = i + e;
          a += w.coefficient(static_cast<std::size_t>(i)) * Rational((l - 1) % 2 == 0 ? 1 : -1, l);
        }
        laurent[static_cast<std::size_t>(e)] = to_long_double(a);
      }
      t.pj.push_back(std::move(p));
      t.difference.push_back(diff.to_numeric<long double>());
      t.weight.push_back(w.to_numeric<long double>());
      t.laurent.push_back(std::move(laurent));
    }
    return t;
  }();
  return tables;
}

struct Constants {
  long double gamma;
  std::array<long double, kMaxZetaPrimeIndex + 1> zp;
};

const Constants& constants_ld() {
  static const Constants c = [] {
    Constants out{};
    // gamma = H_{N-1} - log N + 1/(2N) + sum_r B_{2r}/(2r N^{2r}).
    const int N = 10;
    const BernoulliTable& table = BernoulliTable::instance();
    long double g = 0;
    for (int k = 1; k < N; ++k) g += 1.0L / k;
    g += -std::log(static_cast<long double>(N)) + 0.5L / N;
    for (int r = 1; 2 * r <= 40; ++r) {
      g += to_long_double(table.number(2 * r)) / (2 * r) / std::pow(static_cast<long double>(N), 2 * r);
    }
    out.gamma = g;
    // A shorter head keeps N^{j+1} cancellation small for larger j.
    for (int j = 0; j <= kMaxZetaPrimeIndex; ++j) out.zp[static_cast<std::size_t>(j)] = zeta_em(-j, j <= 2 ? 8 : (j <= 4 ? 6 : 5), true);
    return out;
  }();
  return c;
}

}  // namespace

double riemann_zeta(double s) {
  if (s == 1.0) throw_error(ErrorKind::kPole, "riemann_zeta: pole at s=1");
  if (!std::isfinite(s)) throw_error(ErrorKind::kDomain, "riemann_zeta: non-finite argument");
  if (s <= 0 && s == std::floor(s) && -s + 1 <= kBernoulliCapacity) {
    const int n = static_cast<int>(-s);
    const long double b = to_long_double(bernoulli_number(n + 1)) / (n + 1);
    return static_cast<double>(n % 2 == 0 ? b : -b);
  }
  if (s >= -1.0) return static_cast<double>(zeta_em(s, 10, false));
  const long double ls = s;
  const long double refl = std::pow(2.0L, ls) * std::pow(kPi, ls - 1) * std::sin(kPi * ls / 2) *
                           std::tgamma(1 - ls) * zeta_em(1 - ls, 10, false);
  return static_cast<double>(refl);
}

const ConstantsCache& ConstantsCache::instance() {
  static const ConstantsCache cache = [] {
    ConstantsCache c;
    const Constants& ld = constants_ld();
    c.gamma = static_cast<double>(ld.gamma);
    for (int j = 0; j <= kMaxZetaPrimeIndex; ++j) c.zeta_prime_neg[static_cast<std::size_t>(j)] = static_cast<double>(ld.zp[static_cast<std::size_t>(j)]);
    c.kinkelin_log = static_cast<double>(1.0L / 12 - ld.zp[1]);
    return c;
  }();
  return cache;
}

double zeta_prime_neg(int j) {
  check_j(j);
  return ConstantsCache::instance().zeta_prime_neg[static_cast<std::size_t>(j)];
}

double euler_gamma() { return ConstantsCache::instance().gamma; }

double kinkelin_log() { return ConstantsCache::instance().kinkelin_log; }

double cj_constant(int j) {
  check_j(j);
  return static_cast<double>(-constants_ld().zp[static_cast<std::size_t>(j)] - 1.0L / ((j + 1) * (j + 1)));
}

Evaluation cj_integral(int j, int order) {
  check_j(j);
  if (order < j + 2) throw_error(ErrorKind::kPrecondition, "cj_integral: order must be at least j+2");
  const BernoulliTable& table = BernoulliTable::instance();
  long double boundary = 0;
  long double inv_fact = 1;
  for (int r = 1; r <= order; ++r) {
    inv_fact /= r;
    boundary -= to_long_double(table.number(r)) * inv_fact * tpow_log_derivative(j, r - 1, 1.0L);
  }
  TailIntegrand g;
  g.order = order;
  g.core = [=](double t) { return static_cast<double>(tpow_log_derivative(j, order, t)); };
  g.derivative = [=](int k, double t) { return static_cast<double>(tpow_log_derivative(j, order + k, t)); };
  g.derivative_order = kBernoulliCapacity;
  g.decay_exponent = order - j;
  g.start = 1.0;
  const Evaluation tail = tail_integral(g);
  const long double sign = (order - 1) % 2 == 0 ? 1.0L : -1.0L;
  Evaluation out;
  out.value = static_cast<double>(boundary + sign * inv_fact * tail.value);
  out.error_estimate = static_cast<double>(inv_fact * tail.error_estimate) +
                       4 * std::numeric_limits<double>::epsilon() * std::fabs(out.value);
  out.route = Route::kQuadrature;
  return out;
}

Rational phi_coefficient(int j, int r) {
  if (j < 0 || r < 0) throw_error(ErrorKind::kDomain, "phi_coefficient: negative index");
  const int a = j + 1;
  const Rational sq = Rational(a * a);
  if (r == 0) return Rational(-1) / sq;
  // (d/dt)^r (t^a log t) at t = 1: the log factor itself vanishes there.
  Rational log_part = 0;
  Rational binom = 1;
  Rational falling = 1;
  for (int i = 0; i < r; ++i) {
    if (i > 0) {
      binom = binom * (r - i + 1) / i;
      falling *= (a - i + 1);
    }
    const int s = r - i;
    const Rational f = factorial(s - 1);
    log_part += binom * falling * ((s - 1) % 2 == 0 ? f : Rational(-f));
  }
  Rational falling_r = 1;
  for (int i = 0; i < r; ++i) falling_r *= (a - i);
  return log_part / a - falling_r / sq;
}

const RationalPolynomial& pj_polynomial(int j) {
  check_j(j);
  return product_tables().pj[static_cast<std::size_t>(j)];
}

long double zeta_product_summand(int j, long double w) {
  check_j(j);
  const ProductTables& t = product_tables();
  const auto idx = static_cast<std::size_t>(j);
  if (w >= kLaurentThreshold) {
    const std::vector<long double>& a = t.laurent[idx];
    const long double inv = 1 / w;
    long double acc = 0;
    for (int e = kLaurentTerms; e >= 1; --e) acc = (acc + a[static_cast<std::size_t>(e)]) * inv;
    return acc;
  }
  return t.difference[idx](w) + t.weight[idx](w) * std::log1p(1 / w);
}

double zeta_product_tail(int j, double w) {
  check_j(j);
  const std::vector<long double>& a = product_tables().laurent[static_cast<std::size_t>(j)];
  long double head = 0;
  long double x = w;
  while (x < kLaurentThreshold) {
    head += zeta_product_summand(j, x);
    x += 1;
  }
  // Hurwitz zeta(e, x) ~ x^{1-e}/(e-1) + x^{-e}/2 + e x^{-e-1}/12.
  long double tail = 0;
  for (int e = 2; e <= 12; ++e) {
    const long double hz = std::pow(x, 1 - e) / (e - 1) + std::pow(x, -e) / 2 + e * std::pow(x, -e - 1) / 12;
    tail += a[static_cast<std::size_t>(e)] * hz;
  }
  return static_cast<double>(head + tail);
}

Evaluation zeta_prime_product(int j, long K) {
  check_j(j);
  if (K < 1) throw_error(ErrorKind::kDomain, "zeta_prime_product: K must be positive");
  const ProductTables& t = product_tables();
  long double acc = t.pj[static_cast<std::size_t>(j)].to_numeric<long double>()(1.0L);
  long double mag = std::fabs(acc);
  for (long k = 1; k <= K; ++k) {
    const long double term = zeta_product_summand(j, static_cast<long double>(k));
    acc += term;
    mag += std::fabs(term);
  }
  Evaluation out;
  out.value = static_cast<double>(acc);
  out.error_estimate = std::fabs(zeta_product_tail(j, static_cast<double>(K + 1))) +
                       static_cast<double>(mag) * 4 * std::numeric_limits<double>::epsilon();
  out.route = Route::kProduct;
  return out;
}

}  // namespace multigamma
