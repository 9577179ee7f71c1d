// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_ERRORS_HPP
#define MULTIGAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multigamma {

enum class ErrorKind {
  kDomain,         // argument outside the function's domain
  kPole,           // argument sits on a pole/zero of the hierarchy
  kOrderTooLarge,  // exact tables would have to grow past their capacity
  kPrecondition,   // caller violated an order/truncation precondition
  kCapability,     // a derivative order was requested that the callee cannot supply
  kNumeric,        // an evaluation could not reach its tolerance
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void throw_error(ErrorKind kind, const std::string& what);

}  // namespace multigamma

#endif  // MULTIGAMMA_ERRORS_HPP
