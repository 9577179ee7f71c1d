// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_CHECKS_HPP
#define MULTIGAMMA_CHECKS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace multigamma {

struct CheckCase {
  std::string label;
  double residual = 0;
  double tolerance = 0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckCase> cases;

  bool passed() const;
  double max_residual() const;
};

/// functional-eq, routes, limits, coefficients, constants.
const std::vector<std::string>& suite_names();

/// Runs a named identity suite. tol overrides the functional-equation
/// tolerance (default 1e-8); other suites carry their own tolerances.
/// Unknown names raise ErrorKind::kDomain.
SuiteReport run_suite(std::string_view name, double tol = 0);

}  // namespace multigamma

#endif  // MULTIGAMMA_CHECKS_HPP
