// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MULTIGAMMA_POLYNOMIAL_HPP
#define MULTIGAMMA_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace multigamma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational to_rational(double x);
double to_double(const Rational& x);
long double to_long_double(const Rational& x);
std::string to_string(const Rational& x);

template <typename T>
class NumericPolynomial;

/// Polynomial in one variable with exact rational coefficients.
///
/// coefficients()[i] multiplies x^i. The coefficient vector never carries
/// trailing zeros, so the zero polynomial has an empty vector and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int degree);
  /// The polynomial x.
  static RationalPolynomial identity();

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rational coefficient(std::size_t i) const;

  RationalPolynomial derivative() const;
  /// k-th derivative.
  RationalPolynomial derivative(int k) const;
  /// Antiderivative vanishing at 0.
  RationalPolynomial antiderivative() const;
  /// p(a*x + b).
  RationalPolynomial compose_linear(const Rational& a, const Rational& b) const;

  Rational operator()(const Rational& x) const;

  template <typename T>
  NumericPolynomial<T> to_numeric() const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) { return !(a == b); }

  /// Human-readable form, highest power first, e.g. "1/6*z^3 - 1/4*z^2 + 1/24".
  std::string to_string(char variable = 'x') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Floating-point image of a RationalPolynomial for hot evaluation loops.
template <typename T>
class NumericPolynomial {
 public:
  NumericPolynomial() = default;
  explicit NumericPolynomial(std::vector<T> coefficients) : coeffs_(std::move(coefficients)) {}

  const std::vector<T>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  template <typename X>
  X operator()(const X& x) const {
    X acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

 private:
  std::vector<T> coeffs_;
};

template <typename T>
NumericPolynomial<T> RationalPolynomial::to_numeric() const {
  std::vector<T> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if constexpr (std::is_same_v<T, long double>) {
      out.push_back(to_long_double(c));
    } else {
      out.push_back(static_cast<T>(to_double(c)));
    }
  }
  return NumericPolynomial<T>(std::move(out));
}

}  // namespace multigamma

#endif  // MULTIGAMMA_POLYNOMIAL_HPP
