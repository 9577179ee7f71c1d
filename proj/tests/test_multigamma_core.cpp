// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "multigamma/combinatorics.hpp"
#include "multigamma/errors.hpp"
#include "multigamma/multigamma_core.hpp"
#include "multigamma/qseries.hpp"
#include "multigamma/zeta_constants.hpp"

using namespace multigamma;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

RationalPolynomial poly(std::vector<Rational> c) { return RationalPolynomial(std::move(c)); }

double log_g(int n, double z) { return eval_log_multigamma(n, z).value; }

// log G(z+1) for integer z from G(k+1) = Gamma(k) G(k): sum_{k=1}^{z-1} log k!.
long double barnes_integer(int z) {
  long double acc = 0;
  long double logfact = 0;
  for (int k = 1; k < z; ++k) {
    logfact += std::log(static_cast<long double>(k));
    acc += logfact;
  }
  return acc;
}

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::fabs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> log_grid(double a, double b, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) out.push_back(a * std::pow(b / a, static_cast<double>(i) / (points - 1)));
  return out;
}

}  // namespace

TEST_CASE("expansion coefficients for n = 1..4") {
  const StirlingExpansion& e1 = stirling_coefficients(1);
  CHECK(e1.log_poly == poly({q(1, 2), q(1)}));
  CHECK(e1.alg_poly == poly({q(-1), q(-1)}));
  REQUIRE(e1.zeta_prime_polys.size() == 1);
  CHECK(e1.zeta_prime_polys[0] == poly({q(-1)}));

  const StirlingExpansion& e2 = stirling_coefficients(2);
  CHECK(e2.log_poly == poly({q(-1, 12), q(0), q(1, 2)}));
  CHECK(e2.alg_poly == poly({q(1, 4), q(-1, 2), q(-3, 4)}));
  CHECK(e2.zeta_prime_polys[0] == poly({q(0), q(-1)}));
  CHECK(e2.zeta_prime_polys[1] == poly({q(1)}));

  const StirlingExpansion& e3 = stirling_coefficients(3);
  CHECK(e3.log_poly == poly({q(1, 24), q(0), q(-1, 4), q(1, 6)}));
  CHECK(e3.alg_poly == poly({q(-13, 72), q(1, 3), q(5, 24), q(-11, 36)}));
  CHECK(e3.zeta_prime_polys[0] == poly({q(0), q(1, 2), q(-1, 2)}));
  CHECK(e3.zeta_prime_polys[1] == poly({q(-1, 2), q(1)}));
  CHECK(e3.zeta_prime_polys[2] == poly({q(-1, 2)}));

  const StirlingExpansion& e4 = stirling_coefficients(4);
  CHECK(e4.log_poly == poly({q(-19, 720), q(0), q(1, 6), q(-1, 6), q(1, 24)}));
  CHECK(e4.zeta_prime_polys[0] == poly({q(0), q(-1, 3), q(1, 2), q(-1, 6)}));
  CHECK(e4.zeta_prime_polys[1] == poly({q(1, 3), q(-1), q(1, 2)}));
  CHECK(e4.zeta_prime_polys[2] == poly({q(1, 2), q(-1, 2)}));
  CHECK(e4.zeta_prime_polys[3] == poly({q(1, 6)}));
}

TEST_CASE("low Bernoulli rows") {
  // n = 2, 3: -1/12 (z+1)^-1 and +1/12 (z+1)^-1.
  const BernoulliRow& r2 = stirling_coefficients(2).bernoulli_terms[0];
  CHECK(r2.index == 2);
  CHECK(r2.weight * r2.inverse_powers[1] == q(-1, 12));
  const BernoulliRow& r3 = stirling_coefficients(3).bernoulli_terms[0];
  CHECK(r3.weight * r3.inverse_powers[1] == q(1, 12));
  // n = 4: -1/12 (z+1)^-1 + (6z^2 + 13z/2 + 5/2) / (720 (z+1)^3).
  const StirlingExpansion& e4 = stirling_coefficients(4);
  CHECK(e4.bernoulli_terms[0].weight * e4.bernoulli_terms[0].inverse_powers[1] == q(-1, 12));
  const BernoulliRow& b4 = e4.bernoulli_terms[1];
  // 6z^2 + 13z/2 + 5/2 = 6 w^2 - 11/2 w + 2 with w = z + 1.
  REQUIRE(b4.inverse_powers.size() == 4);
  CHECK(b4.weight * b4.inverse_powers[1] == q(6, 720));
  CHECK(b4.weight * b4.inverse_powers[2] == q(-11, 1440));
  CHECK(b4.weight * b4.inverse_powers[3] == q(2, 720));
}

TEST_CASE("remainder-row functions") {
  for (int n = 1; n <= 4; ++n) {
    for (double z : {0.0, 1.5, 7.0}) CHECK(f_n_remainder_terms(n, 1, z) == 0.0);
  }
  for (double z : {0.0, 1.5, 7.0}) CHECK(f_n_remainder_terms(1, 2, z) == doctest::Approx(1 / (z + 1)).epsilon(1e-15));
  // second t-derivative of -t log((1+t)/2) at t = 1
  const auto f = [](double t) { return -t * std::log((1 + t) / 2); };
  const double h = 1e-4;
  const double fd = (f(1 + h) - 2 * f(1) + f(1 - h)) / (h * h);
  CHECK(std::fabs(f_n_remainder_terms(2, 3, 1.0) - fd) < 1e-6);
  CHECK_THROWS_AS(f_n_remainder_terms(2, 0, 1.0), Error);
}

TEST_CASE("convergent Euler-MacLaurin route") {
  CHECK(std::fabs(multigamma_em(1, 4.0, 6).value - std::log(24.0)) < 1e-9);
  CHECK(std::fabs(multigamma_em(2, 3.0, 6).value - std::log(2.0)) < 1e-8);
  for (int n = 1; n <= 4; ++n) {
    for (int m : {n + 1, n + 4}) CHECK(std::fabs(multigamma_em(n, 0.0, m).value) < 1e-9);
  }
  // Independent of the order m.
  for (int m : {3, 5, 8, 12}) CHECK(std::fabs(multigamma_em(2, 1.5, m).value - multigamma_em(2, 1.5, 6).value) < 1e-12);
  CHECK(multigamma_em(1, 1.0, 3).route == Route::kEulerMacLaurin);
  try {
    multigamma_em(3, 1.0, 3);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
  }
  CHECK_THROWS_AS(multigamma_em(1, -1.0, 4), Error);
}

TEST_CASE("remainder decay rate") {
  // One integration by parts against the mean-zero kernel leaves the next
  // row: |R| ~ z^{n-m-1} when m is odd, z^{n-m-2} when m is even.
  const std::vector<double> zs = log_grid(50, 800, 9);
  for (auto [n, m] : {std::pair{1, 4}, {2, 5}, {3, 6}, {2, 4}}) {
    std::vector<double> r;
    for (double z : zs) r.push_back(em_remainder(n, z, m).value);
    const double slope = loglog_slope(zs, r);
    const int expected = n - m - (m % 2 == 0 ? 2 : 1);
    CHECK(std::fabs(slope - expected) < 0.3);
    CHECK(slope <= n - m + 1);
  }
}

TEST_CASE("large-z series") {
  long double logfact = 0;
  for (int k = 2; k <= 20; ++k) logfact += std::log(static_cast<long double>(k));
  CHECK(std::fabs(higher_stirling(1, 20.0, 4).value - static_cast<double>(logfact)) < 1e-12);
  CHECK(std::fabs(higher_stirling(2, 20.0, 4).value - static_cast<double>(barnes_integer(20))) < 1e-10);
  CHECK(higher_stirling(2, 20.0, 4).route == Route::kAsymptotic);
  CHECK_THROWS_AS(higher_stirling(1, std::complex<double>(-30.0, 1.0), 4), Error);
  // The reported error is the first omitted row.
  const Evaluation a = higher_stirling(3, 30.0, 2);
  const Evaluation b = higher_stirling(3, 30.0, 3);
  CHECK(std::fabs(a.value - b.value) == doctest::Approx(a.error_estimate).epsilon(1e-6));
}

TEST_CASE("large-z truncation error decay") {
  // Truncating after row 2R leaves the row 2R+2, of order z^{n-2R-2}.
  const std::vector<double> zs = log_grid(50, 800, 9);
  for (auto [n, R] : {std::pair{3, 1}, {2, 1}}) {
    std::vector<double> d;
    for (double z : zs) d.push_back(higher_stirling(n, z, R).value - log_g(n, z));
    CHECK(std::fabs(loglog_slope(zs, d) - (n - 2 * R - 2)) < 0.3);
  }
}

TEST_CASE("dispatcher known values") {
  CHECK(std::fabs(log_g(1, 4.0) - std::log(24.0)) < 1e-10);
  CHECK(std::fabs(log_g(2, 3.0) - std::log(2.0)) < 1e-9);
  CHECK(std::fabs(log_g(2, 4.0) - std::log(12.0)) < 1e-9);
  CHECK(std::fabs(log_g(3, 1.0)) < 1e-10);
  CHECK(std::fabs(log_g(1, 0.5) - std::log(std::sqrt(M_PI) / 2)) < 1e-12);
  for (double z : {0.1, 3.7, 12.0, 25.0, 140.0}) CHECK(std::fabs(log_g(1, z) - std::lgamma(z + 1)) < 1e-12 * std::max(1.0, std::lgamma(z + 1)));
  for (int z = 1; z <= 30; ++z) {
    const double ref = static_cast<double>(barnes_integer(z));
    CHECK(std::fabs(log_g(2, z) - ref) < 1e-12 * std::max(1.0, ref));
  }
  for (int n = 0; n <= 4; ++n) CHECK(std::fabs(log_g(n, 0.0)) < 1e-10);
  CHECK(eval_log_multigamma(2, 1.5).route == Route::kRecurrence);
  CHECK(eval_log_multigamma(2, 25.0).route == Route::kAsymptotic);
}

TEST_CASE("dispatcher poles and negative arguments") {
  for (double z : {-1.0, -2.0, -7.0}) {
    try {
      eval_log_multigamma(3, z);
      FAIL("expected a pole");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kPole);
      CHECK(std::string(e.what()).rfind("pole at z=", 0) == 0);
    }
  }
  // |Gamma(-0.5)| = 2 sqrt(pi)
  CHECK(std::fabs(log_g(1, -1.5) - std::log(2 * std::sqrt(M_PI))) < 1e-12);
  CHECK_THROWS_AS(eval_log_multigamma(10, 1.0), Error);
}

TEST_CASE("dispatcher on complex arguments") {
  const std::complex<double> two_pi_i(0.0, 2 * M_PI);
  for (std::complex<double> z : {std::complex<double>(0.5, 1.0), {-2.5, 3.0}, {4.0, -0.7}}) {
    for (int n = 1; n <= 3; ++n) {
      const std::complex<double> r = eval_log_multigamma(n, z + 1.0).value - eval_log_multigamma(n - 1, z).value -
                                     eval_log_multigamma(n, z).value;
      const double k = std::round(r.imag() / two_pi_i.imag());
      CHECK(std::abs(r - k * two_pi_i) < 1e-10);
      // Real on the real axis, so conjugate symmetric.
      const std::complex<double> c = eval_log_multigamma(n, std::conj(z)).value;
      CHECK(std::abs(c - std::conj(eval_log_multigamma(n, z).value)) < 1e-12);
    }
  }
  // |Gamma(1 + i)|^2 = pi / sinh(pi)
  const std::complex<double> g = eval_log_multigamma(1, std::complex<double>(0.0, 1.0)).value;
  CHECK(std::fabs(2 * g.real() - std::log(M_PI / std::sinh(M_PI))) < 1e-12);
}

TEST_CASE("functional equation grid") {
  for (int n = 1; n <= 4; ++n) {
    for (double z : {0.3, 0.7, 1.5, 2.5, 5.0}) {
      const double r = log_g(n, z) - log_g(n - 1, z - 1) - log_g(n, z - 1);
      CHECK(std::fabs(r) < 1e-8);
    }
  }
}

TEST_CASE("log-convexity of the hierarchy") {
  for (int n = 1; n <= 3; ++n) {
    const double h = 0.1;
    const int order = n + 1;
    for (double z = 0.5; z <= 4.0 + 1e-12; z += h) {
      double diff = 0;
      for (int i = 0; i <= order; ++i) {
        diff += (i % 2 == 0 ? 1 : -1) * to_double(binomial(order, i)) * log_g(n, z + (order / 2.0 - i) * h);
      }
      CHECK(diff >= -1e-6);
    }
  }
}

TEST_CASE("three classical routes agree") {
  for (int n = 1; n <= 3; ++n) {
    for (double z : {1.5, 2.5}) {
      const Evaluation em = multigamma_em(n, z, n + 4);
      const Evaluation ws = weierstrass_log(n, z, 100000);
      const Evaluation rec = eval_log_multigamma(n, z);
      CHECK(std::fabs(em.value - rec.value) <= 5 * (em.error_estimate + rec.error_estimate));
      CHECK(std::fabs(ws.value - rec.value) <= 5 * (ws.error_estimate + rec.error_estimate));
      CHECK(std::fabs(ws.value - em.value) <= 5 * (ws.error_estimate + em.error_estimate));
      CHECK(std::fabs(ws.value - rec.value) < 1e-4);
    }
  }
}

TEST_CASE("q-deformed values approach the classical ones") {
  const double ref = log_g(2, 1.5);
  double previous = INFINITY;
  for (double qv : {0.9, 0.99, 0.999}) {
    const double d = std::fabs(q_multigamma(2, 1.5, QContext(qv)).value - ref);
    CHECK(d < previous);
    previous = d;
  }
  CHECK(previous < 5e-3);
}

TEST_CASE("K_j partial sums") {
  CHECK(std::fabs(kj_series(0, 1.0, 100000)) < 1e-5);
  CHECK(std::fabs(kj_series(0, 2.5, 100000) - std::lgamma(3.5)) < 1e-5);
  const std::vector<RationalPolynomial> g = gnj_coefficients(2);
  const double z = 1.5;
  double assembled = 0;
  for (int j = 0; j < 2; ++j) assembled += to_double(g[static_cast<std::size_t>(j)](to_rational(z))) * kj_series(j, z, 100000);
  CHECK(std::fabs(assembled - log_g(2, z)) < 1e-4);
  double previous = INFINITY;
  for (long K : {100L, 200L, 400L, 800L, 1600L}) {
    const double d = std::fabs(kj_series(1, z, 2 * K) - kj_series(1, z, K));
    CHECK(d < previous);
    previous = d;
  }
}

TEST_CASE("Q_j polynomials") {
  CHECK(qj_polynomial(0).is_zero());
  CHECK(qj_polynomial(1) == poly({q(0), q(1, 2), q(1, 2)}));
  CHECK(qj_polynomial(2) == poly({q(0), q(1, 12), q(3, 4), q(1, 2)}));
  CHECK(qj_polynomial(3) == poly({q(0), q(0), q(5, 24), q(11, 12), q(11, 24)}));
  for (int j = 0; j <= 8; ++j) {
    CHECK(qj_polynomial(j).degree() <= j + 1);
    CHECK(qj_polynomial(j)(Rational(0)) == 0);
  }
}

TEST_CASE("Weierstrass data") {
  const WeierstrassForm& f1 = weierstrass_form(1);
  CHECK(f1.prefactor_poly.is_zero());
  CHECK(f1.gamma_poly == poly({q(0), q(-1)}));
  CHECK(f1.exponent_poly == poly({q(-1)}));
  const WeierstrassForm& f2 = weierstrass_form(2);
  CHECK(f2.prefactor_poly == poly({q(0), q(-1, 2), q(-1, 2)}));
  REQUIRE(f2.zeta_prime_polys.size() == 1);
  CHECK(f2.zeta_prime_polys[0] == poly({q(0), q(-1)}));
  CHECK(f2.gamma_poly == poly({q(0), q(0), q(-1, 2)}));
  CHECK(f2.exponent_poly == poly({q(0), q(1)}));
  // exponent of the n = 3 factor: (z^3/6 - z^2/4)/k - (z^2/4 - z/2) + (z/2) k
  const WeierstrassForm& f3 = weierstrass_form(3);
  REQUIRE(f3.phi_coeffs.size() == 3);
  CHECK(f3.phi_coeffs[0] == poly({q(0), q(0), q(-1, 4), q(1, 6)}));
  CHECK(f3.phi_coeffs[1] == poly({q(0), q(1, 2), q(-1, 4)}));
  CHECK(f3.phi_coeffs[2] == poly({q(0), q(1, 2)}));
  for (int n = 1; n <= 6; ++n) {
    const WeierstrassForm& f = weierstrass_form(n);
    CHECK(f.phi_coeffs.size() == static_cast<std::size_t>(n));
    int top = -1;
    for (const auto& c : f.phi_coeffs) top = std::max(top, c.degree());
    CHECK(top == n);
    CHECK(f.exponent_poly.degree() == n - 1);
  }
}

TEST_CASE("Phi values") {
  for (long k : {1L, 2L, 7L}) CHECK(phi_n(1, q(3, 2), k) == q(3, 2) / k);
  CHECK(phi_n(2, q(1), 1) == q(-1, 2));
  CHECK(phi_n(3, q(2), 3) == q(1, 9) + 3);
  CHECK(phi_n(3, 2.0, 3) == doctest::Approx(1.0 / 9 + 3).epsilon(1e-15));
  CHECK_THROWS_AS(phi_n(2, q(1), 0), Error);
}

TEST_CASE("Weierstrass product") {
  CHECK(std::fabs(weierstrass_log(1, 1.0, 100000).value) < 1e-5);
  CHECK(std::fabs(weierstrass_log(2, 1.0, 100000).value) < 1e-4);
  // The estimate tracks the actual tail.
  for (int n = 1; n <= 4; ++n) {
    const Evaluation w = weierstrass_log(n, 1.5, 2000);
    const double truth = log_g(n, 1.5);
    CHECK(std::fabs(w.value - truth) <= 1.05 * w.error_estimate + 1e-12);
    CHECK(std::fabs(w.value - truth) >= 0.5 * w.error_estimate);
  }
  const std::complex<double> z(0.5, 1.0);
  const ComplexEvaluation c = weierstrass_log(2, z, 100000);
  CHECK(std::abs(c.value - eval_log_multigamma(2, z).value) < 5 * c.error_estimate + 1e-12);
  CHECK_THROWS_AS(weierstrass_log(2, -1.0, 10), Error);
  CHECK_THROWS_AS(weierstrass_log(2, -3.5, 10), Error);
}
