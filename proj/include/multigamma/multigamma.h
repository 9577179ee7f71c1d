/* Copyright 2026 The multigamma Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the multiple gamma library. Values are log G_n(z+1) (and
 * their q-analogues); every call returns an mg_status, and the message of
 * the last failure on a context is available from mg_last_error.
 */

#ifndef MULTIGAMMA_MULTIGAMMA_H
#define MULTIGAMMA_MULTIGAMMA_H

#include <stddef.h>

#if defined(_WIN32)
#define MG_API __declspec(dllexport)
#else
#define MG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mg_status {
  MG_OK = 0,
  MG_ERR_DOMAIN = 1,
  MG_ERR_POLE = 2,
  MG_ERR_ORDER_TOO_LARGE = 3,
  MG_ERR_PRECONDITION = 4,
  MG_ERR_CAPABILITY = 5,
  MG_ERR_NUMERIC = 6,
  MG_ERR_INVALID_ARGUMENT = 7,
  MG_ERR_INTERNAL = 8
} mg_status;

typedef enum mg_route {
  MG_ROUTE_AUTO = -1,
  MG_ROUTE_EM = 0,
  MG_ROUTE_ASYMPTOTIC = 1,
  MG_ROUTE_WEIERSTRASS = 2,
  MG_ROUTE_RECURRENCE = 3,
  MG_ROUTE_QLIMIT = 4,
  MG_ROUTE_PRODUCT = 5,
  MG_ROUTE_QUADRATURE = 6
} mg_route;

typedef struct mg_value {
  double re;
  double im;
  double error_estimate;
  int route; /* the mg_route that produced the value */
} mg_value;

typedef struct mg_check_case {
  const char* label; /* owned by the report */
  double residual;
  double tolerance;
  int passed;
} mg_check_case;

typedef struct mg_context mg_context;
typedef struct mg_report mg_report;

MG_API mg_status mg_context_create(mg_context** out);
MG_API void mg_context_destroy(mg_context* ctx);
/* Target tolerance for dispatcher evaluations; default 1e-9. */
MG_API mg_status mg_context_set_tolerance(mg_context* ctx, double tol);
MG_API double mg_context_tolerance(const mg_context* ctx);
/* Empty string when the last call on ctx succeeded. */
MG_API const char* mg_last_error(const mg_context* ctx);

MG_API const char* mg_status_string(mg_status status);
MG_API const char* mg_route_name(int route);

/* log G_n(z+1) at z = re + i im.
 *   route AUTO: recurrence-shifted asymptotic dispatcher (truncation ignored)
 *   route EM: convergent expansion, real z > -1, truncation = order m (0: n+4)
 *   route ASYMPTOTIC: the large-z series, truncation = rows R (0: best R)
 *   route WEIERSTRASS (or PRODUCT): truncation = K factors (0: 100000) */
MG_API mg_status mg_eval(mg_context* ctx, int n, double re, double im, int route, long truncation, mg_value* out);

/* log G_n(z+1; q) for 0 < q < 1, real z > -1.
 *   route AUTO: product, or the expansion for q > 0.999
 *   route PRODUCT: K factors (0: automatic)
 *   route EM: expansion of order m (0: n+4), n >= 1 */
MG_API mg_status mg_qeval(mg_context* ctx, int n, double z, double q, int route, long K, int m, mg_value* out);

MG_API mg_status mg_euler_gamma(double* out);
MG_API mg_status mg_kinkelin_log(double* out);
/* zeta'(-j) for 0 <= j <= 8. */
MG_API mg_status mg_zeta_prime(mg_context* ctx, int j, double* out);
/* C_j = -zeta'(-j) - 1/(j+1)^2. */
MG_API mg_status mg_cj_constant(mg_context* ctx, int j, double* out);
/* K-term product for zeta'(-j); error_estimate is the omitted tail. */
MG_API mg_status mg_zeta_prime_product(mg_context* ctx, int j, long K, mg_value* out);

MG_API size_t mg_suite_count(void);
MG_API const char* mg_suite_name(size_t i);
/* tol <= 0 keeps the suite defaults. */
MG_API mg_status mg_check_run(mg_context* ctx, const char* suite, double tol, mg_report** out);
MG_API const char* mg_report_suite(const mg_report* report);
MG_API size_t mg_report_size(const mg_report* report);
MG_API mg_status mg_report_case(const mg_report* report, size_t i, mg_check_case* out);
MG_API int mg_report_passed(const mg_report* report);
MG_API double mg_report_max_residual(const mg_report* report);
MG_API void mg_report_destroy(mg_report* report);

#ifdef __cplusplus
}
#endif

#endif /* MULTIGAMMA_MULTIGAMMA_H */
