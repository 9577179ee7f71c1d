// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_EVALUATION_HPP
#define MULTIGAMMA_EVALUATION_HPP

#include <complex>
#include <string_view>

namespace multigamma {

/// Which evaluation path produced a value.
enum class Route {
  kEulerMacLaurin,
  kAsymptotic,
  kWeierstrass,
  kRecurrence,
  kQLimit,
  kProduct,
  kQuadrature,
};

std::string_view to_string(Route route) noexcept;

/// A value with a heuristic absolute error estimate.
///
/// Estimates are not rigorous enclosures: asymptotic routes report the first
/// omitted term, product routes their tail bound, quadratures the change
/// under node doubling plus a truncation bound.
template <typename T>
struct BasicEvaluation {
  T value{};
  double error_estimate = 0.0;
  Route route = Route::kQuadrature;
};

using Evaluation = BasicEvaluation<double>;
using ComplexEvaluation = BasicEvaluation<std::complex<double>>;

}  // namespace multigamma

#endif  // MULTIGAMMA_EVALUATION_HPP
