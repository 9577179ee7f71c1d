// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/multigamma.h"

#include <cmath>
#include <complex>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "multigamma/checks.hpp"
#include "multigamma/errors.hpp"
#include "multigamma/multigamma_core.hpp"
#include "multigamma/qseries.hpp"
#include "multigamma/zeta_constants.hpp"

struct mg_context {
  double tolerance = 1e-9;
  std::string last_error;
};

struct mg_report {
  multigamma::SuiteReport report;
};

namespace {

using namespace multigamma;

constexpr long kDefaultProductFactors = 100000;

mg_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain:
      return MG_ERR_DOMAIN;
    case ErrorKind::kPole:
      return MG_ERR_POLE;
    case ErrorKind::kOrderTooLarge:
      return MG_ERR_ORDER_TOO_LARGE;
    case ErrorKind::kPrecondition:
      return MG_ERR_PRECONDITION;
    case ErrorKind::kCapability:
      return MG_ERR_CAPABILITY;
    case ErrorKind::kNumeric:
      return MG_ERR_NUMERIC;
  }
  return MG_ERR_INTERNAL;
}

int route_code(Route r) {
  switch (r) {
    case Route::kEulerMacLaurin:
      return MG_ROUTE_EM;
    case Route::kAsymptotic:
      return MG_ROUTE_ASYMPTOTIC;
    case Route::kWeierstrass:
      return MG_ROUTE_WEIERSTRASS;
    case Route::kRecurrence:
      return MG_ROUTE_RECURRENCE;
    case Route::kQLimit:
      return MG_ROUTE_QLIMIT;
    case Route::kProduct:
      return MG_ROUTE_PRODUCT;
    case Route::kQuadrature:
      return MG_ROUTE_QUADRATURE;
  }
  return MG_ROUTE_QUADRATURE;
}

// Runs f, translating exceptions into a status and the context message.
template <typename F>
mg_status guarded(mg_context* ctx, F&& f) {
  try {
    if (ctx != nullptr) ctx->last_error.clear();
    f();
    return MG_OK;
  } catch (const Error& e) {
    if (ctx != nullptr) ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    if (ctx != nullptr) ctx->last_error = "out of memory";
    return MG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    if (ctx != nullptr) ctx->last_error = e.what();
    return MG_ERR_INTERNAL;
  }
}

mg_status invalid(mg_context* ctx, const char* what) {
  if (ctx != nullptr) ctx->last_error = what;
  return MG_ERR_INVALID_ARGUMENT;
}

void fill(mg_value* out, std::complex<double> v, double err, Route r) {
  out->re = v.real();
  out->im = v.imag();
  out->error_estimate = err;
  out->route = route_code(r);
}

ComplexEvaluation best_asymptotic(int n, std::complex<double> z) {
  ComplexEvaluation best = higher_stirling(n, z, 1);
  for (int R = 2; R < kMaxStirlingRows; ++R) {
    const ComplexEvaluation e = higher_stirling(n, z, R);
    if (e.error_estimate >= best.error_estimate) break;
    best = e;
  }
  return best;
}

}  // namespace

extern "C" {

mg_status mg_context_create(mg_context** out) {
  if (out == nullptr) return MG_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) mg_context();
  return *out == nullptr ? MG_ERR_INTERNAL : MG_OK;
}

void mg_context_destroy(mg_context* ctx) { delete ctx; }

mg_status mg_context_set_tolerance(mg_context* ctx, double tol) {
  if (ctx == nullptr) return MG_ERR_INVALID_ARGUMENT;
  if (!(tol > 0) || !std::isfinite(tol)) return invalid(ctx, "tolerance must be positive and finite");
  ctx->tolerance = tol;
  return MG_OK;
}

double mg_context_tolerance(const mg_context* ctx) { return ctx == nullptr ? 0.0 : ctx->tolerance; }

const char* mg_last_error(const mg_context* ctx) { return ctx == nullptr ? "" : ctx->last_error.c_str(); }

const char* mg_status_string(mg_status status) {
  switch (status) {
    case MG_OK:
      return "ok";
    case MG_ERR_DOMAIN:
      return "domain error";
    case MG_ERR_POLE:
      return "pole";
    case MG_ERR_ORDER_TOO_LARGE:
      return "order too large";
    case MG_ERR_PRECONDITION:
      return "precondition violated";
    case MG_ERR_CAPABILITY:
      return "capability error";
    case MG_ERR_NUMERIC:
      return "numeric failure";
    case MG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case MG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* mg_route_name(int route) {
  switch (route) {
    case MG_ROUTE_AUTO:
      return "auto";
    case MG_ROUTE_EM:
      return "em";
    case MG_ROUTE_ASYMPTOTIC:
      return "asym";
    case MG_ROUTE_WEIERSTRASS:
      return "weierstrass";
    case MG_ROUTE_RECURRENCE:
      return "recurrence";
    case MG_ROUTE_QLIMIT:
      return "qlimit";
    case MG_ROUTE_PRODUCT:
      return "product";
    case MG_ROUTE_QUADRATURE:
      return "quadrature";
    default:
      return "unknown";
  }
}

mg_status mg_eval(mg_context* ctx, int n, double re, double im, int route, long truncation, mg_value* out) {
  if (out == nullptr) return invalid(ctx, "output pointer is null");
  return guarded(ctx, [&] {
    const std::complex<double> z(re, im);
    switch (route) {
      case MG_ROUTE_AUTO: {
        const ComplexEvaluation e = eval_log_multigamma(n, z, ctx != nullptr ? ctx->tolerance : 1e-9);
        fill(out, e.value, e.error_estimate, e.route);
        return;
      }
      case MG_ROUTE_EM: {
        if (im != 0.0) throw_error(ErrorKind::kDomain, "the em route takes real z only");
        const Evaluation e = multigamma_em(n, re, truncation > 0 ? static_cast<int>(truncation) : n + 4);
        fill(out, e.value, e.error_estimate, e.route);
        return;
      }
      case MG_ROUTE_ASYMPTOTIC: {
        const ComplexEvaluation e =
            truncation > 0 ? higher_stirling(n, z, static_cast<int>(truncation)) : best_asymptotic(n, z);
        fill(out, e.value, e.error_estimate, e.route);
        return;
      }
      case MG_ROUTE_WEIERSTRASS:
      case MG_ROUTE_PRODUCT: {
        const ComplexEvaluation e = weierstrass_log(n, z, truncation > 0 ? truncation : kDefaultProductFactors);
        fill(out, e.value, e.error_estimate, e.route);
        return;
      }
      default:
        throw_error(ErrorKind::kDomain, "route " + std::to_string(route) + " is not a classical route");
    }
  });
}

mg_status mg_qeval(mg_context* ctx, int n, double z, double q, int route, long K, int m, mg_value* out) {
  if (out == nullptr) return invalid(ctx, "output pointer is null");
  return guarded(ctx, [&] {
    const QContext qc(q);
    Evaluation e;
    switch (route) {
      case MG_ROUTE_AUTO:
        e = q_multigamma(n, z, qc);
        break;
      case MG_ROUTE_PRODUCT:
        e = q_multigamma_product(n, z, qc, K > 0 ? K : 0);
        break;
      case MG_ROUTE_EM:
        e = q_multigamma_expansion(n, z, qc, m > 0 ? m : n + 4).evaluation();
        break;
      default:
        throw_error(ErrorKind::kDomain, "route " + std::to_string(route) + " is not a q route");
    }
    fill(out, e.value, e.error_estimate, e.route);
  });
}

mg_status mg_euler_gamma(double* out) {
  if (out == nullptr) return MG_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] { *out = euler_gamma(); });
}

mg_status mg_kinkelin_log(double* out) {
  if (out == nullptr) return MG_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] { *out = kinkelin_log(); });
}

mg_status mg_zeta_prime(mg_context* ctx, int j, double* out) {
  if (out == nullptr) return invalid(ctx, "output pointer is null");
  return guarded(ctx, [&] { *out = zeta_prime_neg(j); });
}

mg_status mg_cj_constant(mg_context* ctx, int j, double* out) {
  if (out == nullptr) return invalid(ctx, "output pointer is null");
  return guarded(ctx, [&] { *out = cj_constant(j); });
}

mg_status mg_zeta_prime_product(mg_context* ctx, int j, long K, mg_value* out) {
  if (out == nullptr) return invalid(ctx, "output pointer is null");
  return guarded(ctx, [&] {
    const Evaluation e = zeta_prime_product(j, K);
    fill(out, e.value, e.error_estimate, e.route);
  });
}

size_t mg_suite_count(void) { return suite_names().size(); }

const char* mg_suite_name(size_t i) { return i < suite_names().size() ? suite_names()[i].c_str() : nullptr; }

mg_status mg_check_run(mg_context* ctx, const char* suite, double tol, mg_report** out) {
  if (out == nullptr || suite == nullptr) return invalid(ctx, "null argument");
  *out = nullptr;
  return guarded(ctx, [&] {
    auto report = std::make_unique<mg_report>();
    report->report = run_suite(suite, tol);
    *out = report.release();
  });
}

const char* mg_report_suite(const mg_report* report) { return report == nullptr ? "" : report->report.suite.c_str(); }

size_t mg_report_size(const mg_report* report) { return report == nullptr ? 0 : report->report.cases.size(); }

mg_status mg_report_case(const mg_report* report, size_t i, mg_check_case* out) {
  if (report == nullptr || out == nullptr || i >= report->report.cases.size()) return MG_ERR_INVALID_ARGUMENT;
  const CheckCase& c = report->report.cases[i];
  out->label = c.label.c_str();
  out->residual = c.residual;
  out->tolerance = c.tolerance;
  out->passed = c.passed ? 1 : 0;
  return MG_OK;
}

int mg_report_passed(const mg_report* report) { return report != nullptr && report->report.passed() ? 1 : 0; }

double mg_report_max_residual(const mg_report* report) { return report == nullptr ? 0.0 : report->report.max_residual(); }

void mg_report_destroy(mg_report* report) { delete report; }

}  // extern "C"
