// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "multigamma/combinatorics.hpp"
#include "multigamma/errors.hpp"

namespace multigamma {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxIntervals = 4000000;

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(kPi * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    // Recompute the derivative at the converged node.
    long double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    rule.nodes[static_cast<std::size_t>(i)] = (1 - x) / 2;
    rule.weights[static_cast<std::size_t>(i)] = 1 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

// B_m restricted to [0, 1) sampled at the nodes of a rule, plus max |B_m|.
struct Kernel {
  std::vector<long double> at16;
  std::vector<long double> at32;
  long double max_abs = 0;
};

Kernel make_kernel(int m) {
  const auto poly = BernoulliTable::instance().polynomial(m).to_numeric<long double>();
  Kernel k;
  for (long double t : gauss_legendre(16).nodes) k.at16.push_back(poly(t));
  for (long double t : gauss_legendre(32).nodes) k.at32.push_back(poly(t));
  for (int i = 0; i <= 256; ++i) k.max_abs = std::max(k.max_abs, std::fabs(poly(i / 256.0L)));
  return k;
}

struct IntervalResult {
  long double value;
  long double error;
  long double max_abs_g;
};

template <typename G>
IntervalResult kernel_interval(const Kernel& kernel, const G& g, long double left) {
  const GaussRule& r16 = gauss_legendre(16);
  const GaussRule& r32 = gauss_legendre(32);
  long double c16 = 0, c32 = 0, gmax = 0;
  for (std::size_t i = 0; i < r16.nodes.size(); ++i) {
    const long double gv = g(static_cast<double>(left + r16.nodes[i]));
    gmax = std::max(gmax, std::fabs(gv));
    c16 += r16.weights[i] * kernel.at16[i] * gv;
  }
  for (std::size_t i = 0; i < r32.nodes.size(); ++i) {
    const long double gv = g(static_cast<double>(left + r32.nodes[i]));
    gmax = std::max(gmax, std::fabs(gv));
    c32 += r32.weights[i] * kernel.at32[i] * gv;
  }
  return {c32, std::fabs(c32 - c16), gmax};
}

// int_T^inf Bbar_m g = sum_{j>=1} (-1)^j m!/(m+j)! B_{m+j} g^(j-1)(T).
// Returns false when the series does not get below the threshold.
bool closing_series(const TailIntegrand& g, double T, long double threshold, long double& value,
                    long double& error) {
  const BernoulliTable& table = BernoulliTable::instance();
  const int m = g.order;
  long double sum = 0;
  long double coeff = 1;  // m!/(m+j)!
  long double previous = std::numeric_limits<long double>::infinity();
  int rises = 0;
  int zeros = 0;
  for (int j = 1; j - 1 <= g.derivative_order && m + j <= table.capacity(); ++j) {
    coeff /= (m + j);
    const Rational& b = table.number(m + j);
    if (b == 0) continue;
    const long double term =
        ((j % 2 == 0) ? 1.0L : -1.0L) * coeff * to_long_double(b) * g.derivative(j - 1, T);
    const long double mag = std::fabs(term);
    if (!std::isfinite(static_cast<double>(mag))) return false;
    // A single vanishing term may be an accidental zero of g^(j-1).
    if (mag == 0 && zeros++ == 0) continue;
    if (mag <= threshold) {
      value = sum + term;
      error = mag;
      return true;
    }
    if (mag > previous && ++rises >= 2) return false;
    previous = mag;
    sum += term;
  }
  return false;
}

}  // namespace

const GaussRule& gauss_legendre(int points) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(points);
  if (it == cache.end()) it = cache.emplace(points, build_rule(points)).first;
  return it->second;
}

Evaluation integrate(const std::function<double(double)>& f, double a, double b) {
  Evaluation out;
  out.route = Route::kQuadrature;
  if (a == b) return out;
  const double sign = b > a ? 1.0 : -1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);
  const long pieces = std::max(1L, static_cast<long>(std::ceil(hi - lo)));
  const long double h = (static_cast<long double>(hi) - lo) / pieces;
  const GaussRule& r16 = gauss_legendre(16);
  const GaussRule& r32 = gauss_legendre(32);
  long double total = 0, err = 0, mag = 0;
  for (long p = 0; p < pieces; ++p) {
    const long double left = lo + p * h;
    long double c16 = 0, c32 = 0;
    for (std::size_t i = 0; i < r16.nodes.size(); ++i)
      c16 += r16.weights[i] * f(static_cast<double>(left + h * r16.nodes[i]));
    for (std::size_t i = 0; i < r32.nodes.size(); ++i) {
      const long double v = f(static_cast<double>(left + h * r32.nodes[i]));
      c32 += r32.weights[i] * v;
      mag += r32.weights[i] * std::fabs(v);
    }
    total += h * c32;
    err += h * std::fabs(c32 - c16);
  }
  out.value = sign * static_cast<double>(total);
  out.error_estimate = static_cast<double>(err + kEps * h * mag);
  return out;
}

Evaluation em_sum(const SmoothFunction& f, long M, long N, int m) {
  if (m < 1) throw_error(ErrorKind::kPrecondition, "em_sum: order must be positive");
  if (M >= N) throw_error(ErrorKind::kPrecondition, "em_sum: requires M < N");
  if (m > f.max_order) {
    throw_error(ErrorKind::kCapability, "em_sum: derivative of order " + std::to_string(m) +
                                            " requested, function supplies up to " + std::to_string(f.max_order));
  }
  const BernoulliTable& table = BernoulliTable::instance();

  long double integral = 0, error = 0;
  if (f.antiderivative) {
    integral = static_cast<long double>(f.antiderivative(static_cast<double>(N))) - f.antiderivative(static_cast<double>(M));
  } else {
    const Evaluation q = integrate([&](double t) { return f.derivative(0, t); }, static_cast<double>(M),
                                   static_cast<double>(N));
    integral = q.value;
    error += q.error_estimate;
  }

  long double boundary = 0;
  long double inv_fact = 1;
  for (int k = 1; k <= m; ++k) {
    inv_fact /= k;
    const Rational& b = table.number(k);
    if (b == 0) continue;
    boundary += to_long_double(b) * inv_fact *
                (static_cast<long double>(f.derivative(k - 1, static_cast<double>(N))) -
                 f.derivative(k - 1, static_cast<double>(M)));
  }

  const Kernel kernel = make_kernel(m);
  long double remainder = 0;
  auto fm = [&](double t) { return f.derivative(m, t); };
  for (long i = M; i < N; ++i) {
    const IntervalResult r = kernel_interval(kernel, fm, static_cast<long double>(i));
    remainder += r.value;
    error += r.error * inv_fact;
  }
  remainder *= ((m - 1) % 2 == 0 ? 1 : -1) * inv_fact;

  Evaluation out;
  out.value = static_cast<double>(integral + boundary + remainder);
  out.error_estimate = static_cast<double>(error);
  out.route = Route::kEulerMacLaurin;
  return out;
}

Evaluation tail_integral(const TailIntegrand& g, double tol) {
  if (g.decay_exponent < 2) {
    throw_error(ErrorKind::kPrecondition,
                "tail_integral: decay exponent " + std::to_string(g.decay_exponent) + " < 2 does not converge");
  }
  if (g.order < 1) throw_error(ErrorKind::kPrecondition, "tail_integral: kernel order must be positive");
  if (g.start != std::floor(g.start)) throw_error(ErrorKind::kPrecondition, "tail_integral: start must be an integer");
  if (!g.core) throw_error(ErrorKind::kPrecondition, "tail_integral: missing integrand");

  const Kernel kernel = make_kernel(g.order);
  const bool closable = static_cast<bool>(g.derivative);
  long double acc = 0, error = 0, magnitude = 0;
  int quiet = 0;
  Evaluation out;
  out.route = Route::kQuadrature;

  for (long k = 0; k < kMaxIntervals; ++k) {
    const double T = g.start + static_cast<double>(k);
    if (closable) {
      long double tail = 0, tail_err = 0;
      // Absolute floor keeps an identically-zero integrand from looping.
      const long double scale = std::max(std::fabs(acc), magnitude * 1e-3L);
      const long double threshold = std::max(static_cast<long double>(tol) * scale, 1e-300L);
      if (closing_series(g, T, threshold, tail, tail_err)) {
        out.value = static_cast<double>(acc + tail);
        out.error_estimate = static_cast<double>(error + tail_err + kEps * magnitude);
        return out;
      }
    }
    const IntervalResult r = kernel_interval(kernel, g.core, static_cast<long double>(T));
    acc += r.value;
    error += r.error;
    magnitude += std::fabs(r.value);
    if (!closable) {
      const long double bound = kernel.max_abs * r.max_abs_g;
      if (bound <= static_cast<long double>(tol) * std::fabs(acc) || r.max_abs_g == 0) {
        ++quiet;
      } else {
        quiet = 0;
      }
      if (quiet >= 3) {
        const double next = T + 1.0;
        const long double gnext = std::fabs(g.core(next));
        const long double tail_bound = kernel.max_abs * gnext * next / (g.decay_exponent - 1);
        out.value = static_cast<double>(acc);
        out.error_estimate = static_cast<double>(error + tail_bound + kEps * magnitude);
        return out;
      }
    }
  }
  throw_error(ErrorKind::kNumeric, "tail_integral: no convergence within the interval budget");
}

}  // namespace multigamma
