// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/errors.hpp"

#include "multigamma/evaluation.hpp"

namespace multigamma {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kPole: return "pole";
    case ErrorKind::kOrderTooLarge: return "order too large";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kCapability: return "capability";
    case ErrorKind::kNumeric: return "numeric";
  }
  return "unknown";
}

void throw_error(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::kEulerMacLaurin: return "em";
    case Route::kAsymptotic: return "asym";
    case Route::kWeierstrass: return "weierstrass";
    case Route::kRecurrence: return "recurrence";
    case Route::kQLimit: return "qlimit";
    case Route::kProduct: return "product";
    case Route::kQuadrature: return "quadrature";
  }
  return "unknown";
}

}  // namespace multigamma
