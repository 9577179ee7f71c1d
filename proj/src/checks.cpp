// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "multigamma/combinatorics.hpp"
#include "multigamma/errors.hpp"
#include "multigamma/multigamma_core.hpp"
#include "multigamma/qseries.hpp"
#include "multigamma/zeta_constants.hpp"

namespace multigamma {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

void add(SuiteReport& r, std::string label, double residual, double tolerance) {
  r.cases.push_back({std::move(label), residual, tolerance, std::isfinite(residual) && residual < tolerance});
}

void add_exact(SuiteReport& r, std::string label, bool equal) { r.cases.push_back({std::move(label), equal ? 0.0 : 1.0, 0.0, equal}); }

RationalPolynomial poly(std::initializer_list<Rational> c) { return RationalPolynomial(std::vector<Rational>(c)); }

Rational q(long a, long b = 1) { return Rational(a, b); }

double log_g(int n, double z) { return eval_log_multigamma(n, z).value; }

SuiteReport functional_eq(double tol) {
  SuiteReport r;
  for (int n = 1; n <= 4; ++n) {
    for (double z : {0.3, 0.7, 1.5, 2.5, 5.0}) {
      const double res = log_g(n, z) - log_g(n - 1, z - 1) - log_g(n, z - 1);
      add(r, fmt("classical n=%g z=%g", n, z), std::fabs(res), tol);
    }
  }
  for (double qv : {0.3, 0.7, 0.95}) {
    const QContext ctx(qv);
    for (int n = 1; n <= 4; ++n) {
      for (double z : {0.3, 0.7, 1.5, 2.5, 5.0}) {
        const double res = q_multigamma(n, z, ctx).value - q_multigamma(n - 1, z - 1, ctx).value -
                           q_multigamma(n, z - 1, ctx).value;
        add(r, fmt("q=%g n=%g z=%g", qv, n, z), std::fabs(res), tol);
      }
    }
  }
  for (int n = 1; n <= 4; ++n) add(r, fmt("normalization n=%g", n), std::fabs(log_g(n, 0.0)), 1e-10);
  return r;
}

SuiteReport routes() {
  SuiteReport r;
  for (int n = 1; n <= 3; ++n) {
    for (double z : {1.5, 2.5}) {
      const Evaluation em = multigamma_em(n, z, n + 4);
      const Evaluation ws = weierstrass_log(n, z, 100000);
      const Evaluation rec = eval_log_multigamma(n, z);
      auto pair = [&](const char* name, const Evaluation& a, const Evaluation& b) {
        const double tol = std::min(1e-4, 5 * (a.error_estimate + b.error_estimate) + 1e-13);
        add(r, fmt("n=%g z=%g ", n, z) + name, std::fabs(a.value - b.value), tol);
      };
      pair("em/recurrence", em, rec);
      pair("weierstrass/recurrence", ws, rec);
      pair("weierstrass/em", ws, em);
    }
  }
  for (double qv : {0.3, 0.7, 0.95}) {
    const QContext ctx(qv);
    for (int n = 1; n <= 3; ++n) {
      const Evaluation p = q_multigamma_product(n, 1.5, ctx);
      const Evaluation e = q_multigamma_expansion(n, 1.5, ctx, n + 4).evaluation();
      add(r, fmt("q=%g n=%g product/expansion", qv, n), std::fabs(p.value - e.value),
          5 * (p.error_estimate + e.error_estimate) + 1e-13);
    }
  }
  return r;
}

SuiteReport limits() {
  SuiteReport r;
  const double ref = log_g(2, 1.5);
  double previous = INFINITY;
  for (double qv : {0.9, 0.99, 0.999}) {
    const double d = std::fabs(q_multigamma(2, 1.5, QContext(qv)).value - ref);
    // ratio to the previous gap must stay below 1
    if (std::isfinite(previous)) add(r, fmt("n=2 z=1.5 gap ratio at q=%g", qv), d / previous, 1.0);
    previous = d;
  }
  add(r, "n=2 z=1.5 gap at q=0.999", previous, 5e-3);
  previous = INFINITY;
  for (double qv : {0.9, 0.99, 0.999}) {
    const double d = std::fabs(std::log(q_number(2.5, QContext(qv))) - std::log(2.5));
    if (std::isfinite(previous)) add(r, fmt("q-number gap ratio at q=%g", qv), d / previous, 1.0);
    previous = d;
  }
  for (int j = 0; j <= 2; ++j) {
    previous = INFINITY;
    for (double qv : {0.9, 0.99, 0.999}) {
      const double d = std::fabs(q_cj_constant(j, j + 2, QContext(qv)).value - cj_constant(j));
      if (std::isfinite(previous)) add(r, fmt("C_%g(q) gap ratio at q=%g", j, qv), d / previous, 1.0);
      previous = d;
    }
  }
  add(r, "K_0 at z=1, K=1e5", std::fabs(kj_series(0, 1.0, 100000)), 1e-5);
  return r;
}

SuiteReport coefficients() {
  SuiteReport r;
  const StirlingExpansion& e1 = stirling_coefficients(1);
  add_exact(r, "n=1 log coefficient z + 1/2", e1.log_poly == poly({q(1, 2), q(1)}));
  const StirlingExpansion& e2 = stirling_coefficients(2);
  add_exact(r, "n=2 log coefficient z^2/2 - 1/12", e2.log_poly == poly({q(-1, 12), q(0), q(1, 2)}));
  add_exact(r, "n=2 algebraic part -3z^2/4 - z/2 + 1/4", e2.alg_poly == poly({q(1, 4), q(-1, 2), q(-3, 4)}));
  add_exact(r, "n=2 zeta' coefficients -z, 1",
            e2.zeta_prime_polys[0] == poly({q(0), q(-1)}) && e2.zeta_prime_polys[1] == poly({q(1)}));
  const StirlingExpansion& e3 = stirling_coefficients(3);
  add_exact(r, "n=3 log coefficient z^3/6 - z^2/4 + 1/24", e3.log_poly == poly({q(1, 24), q(0), q(-1, 4), q(1, 6)}));
  add_exact(r, "n=3 algebraic part -11z^3/36 + 5z^2/24 + z/3 - 13/72",
            e3.alg_poly == poly({q(-13, 72), q(1, 3), q(5, 24), q(-11, 36)}));
  const StirlingExpansion& e4 = stirling_coefficients(4);
  add_exact(r, "n=4 log coefficient z^4/24 - z^3/6 + z^2/6 - 19/720",
            e4.log_poly == poly({q(-19, 720), q(0), q(1, 6), q(-1, 6), q(1, 24)}));
  add_exact(r, "n=4 zeta' coefficients",
            e4.zeta_prime_polys[0] == poly({q(0), q(-1, 3), q(1, 2), q(-1, 6)}) &&
                e4.zeta_prime_polys[1] == poly({q(1, 3), q(-1), q(1, 2)}) &&
                e4.zeta_prime_polys[2] == poly({q(1, 2), q(-1, 2)}) && e4.zeta_prime_polys[3] == poly({q(1, 6)}));
  const BernoulliRow& b4 = e4.bernoulli_terms[1];
  add_exact(r, "n=4 second Bernoulli row (6z^2 + 13z/2 + 5/2)/(720 (z+1)^3)",
            b4.weight * b4.inverse_powers[1] == q(6, 720) && b4.weight * b4.inverse_powers[2] == q(-11, 1440) &&
                b4.weight * b4.inverse_powers[3] == q(2, 720));
  add_exact(r, "Q_1 = (z^2 + z)/2", qj_polynomial(1) == poly({q(0), q(1, 2), q(1, 2)}));
  const WeierstrassForm& w3 = weierstrass_form(3);
  add_exact(r, "n=3 product exponent data",
            w3.phi_coeffs[0] == poly({q(0), q(0), q(-1, 4), q(1, 6)}) && w3.phi_coeffs[1] == poly({q(0), q(1, 2), q(-1, 4)}) &&
                w3.phi_coeffs[2] == poly({q(0), q(1, 2)}));
  bool moak = true;
  for (int n = 1; n <= 10; ++n) moak = moak && moak_polynomial(n)(Rational(1)) == factorial(n - 1);
  add_exact(r, "P_n(1) = (n-1)! for n <= 10", moak);
  return r;
}

SuiteReport constants() {
  SuiteReport r;
  add(r, "zeta'(0) + log sqrt(2 pi)", std::fabs(zeta_prime_neg(0) + 0.5 * std::log(2 * kPi)), 1e-10);
  // log A from the hyperfactorial: sum k log k - (N^2/2 + N/2 + 1/12) log N + N^2/4.
  const long N = 2000;
  long double hyper = 0;
  for (long k = 2; k <= N; ++k) hyper += k * std::log(static_cast<long double>(k));
  const long double nn = N;
  const long double log_a = hyper - (nn * nn / 2 + nn / 2 + 1.0L / 12) * std::log(nn) + nn * nn / 4 -
                            1 / (720 * nn * nn) + 1 / (5040 * nn * nn * nn * nn);
  add(r, "log A + zeta'(-1) - 1/12", std::fabs(static_cast<double>(log_a) + zeta_prime_neg(1) - 1.0 / 12), 1e-10);
  add(r, "cached log A matches the hyperfactorial limit", std::fabs(kinkelin_log() - static_cast<double>(log_a)), 1e-10);
  for (int j = 0; j <= 3; ++j) {
    add(r, fmt("C_%g integral vs closed form", j), std::fabs(cj_integral(j, j + 4).value - cj_constant(j)), 1e-10);
  }
  for (int j = 0; j <= 2; ++j) {
    const Evaluation p = zeta_prime_product(j, 100000);
    add(r, fmt("product for zeta'(-%g) at K=1e5", j), std::fabs(p.value - zeta_prime_neg(j)), 1e-3);
    double previous = INFINITY;
    bool monotone = true;
    for (long K : {100L, 200L, 400L, 800L}) {
      const double d = std::fabs(zeta_prime_product(j, 2 * K).value - zeta_prime_product(j, K).value);
      monotone = monotone && d < previous;
      previous = d;
    }
    add_exact(r, fmt("product for zeta'(-%g) Cauchy differences decrease", j), monotone);
  }
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.passed; });
}

double SuiteReport::max_residual() const {
  double m = 0;
  for (const CheckCase& c : cases) m = std::max(m, c.residual);
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"functional-eq", "routes", "limits", "coefficients", "constants"};
  return names;
}

SuiteReport run_suite(std::string_view name, double tol) {
  SuiteReport r;
  if (name == "functional-eq") {
    r = functional_eq(tol > 0 ? tol : 1e-8);
  } else if (name == "routes") {
    r = routes();
  } else if (name == "limits") {
    r = limits();
  } else if (name == "coefficients") {
    r = coefficients();
  } else if (name == "constants") {
    r = constants();
  } else {
    throw_error(ErrorKind::kDomain, "unknown suite '" + std::string(name) + "'");
  }
  r.suite = std::string(name);
  return r;
}

}  // namespace multigamma
