// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/combinatorics.hpp"

#include <cmath>
#include <string>

#include "multigamma/errors.hpp"

namespace multigamma {

namespace {

void check_index(int n) {
  if (n < 0) throw_error(ErrorKind::kDomain, "Bernoulli index must be nonnegative, got " + std::to_string(n));
  if (n > kBernoulliCapacity) {
    throw_error(ErrorKind::kOrderTooLarge,
                "Bernoulli index " + std::to_string(n) + " exceeds table capacity " +
                    std::to_string(kBernoulliCapacity));
  }
}

}  // namespace

BernoulliTable::BernoulliTable() {
  // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
  numbers_.assign(kBernoulliCapacity + 1, Rational(0));
  numbers_[0] = 1;
  for (int n = 1; n <= kBernoulliCapacity; ++n) {
    if (n > 1 && n % 2 == 1) continue;
    Rational acc = 0;
    Rational c = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += c * numbers_[static_cast<std::size_t>(k)];
      c = c * (n + 1 - k) / (k + 1);
    }
    numbers_[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }

  // B_n(t) = sum_k C(n, k) B_k t^{n-k}.
  polys_.reserve(kBernoulliCapacity + 1);
  for (int n = 0; n <= kBernoulliCapacity; ++n) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    Rational c = 1;
    for (int k = 0; k <= n; ++k) {
      coeffs[static_cast<std::size_t>(n - k)] = c * numbers_[static_cast<std::size_t>(k)];
      c = c * (n - k) / (k + 1);
    }
    polys_.emplace_back(std::move(coeffs));
  }
}

const BernoulliTable& BernoulliTable::instance() {
  static const BernoulliTable table;
  return table;
}

const Rational& BernoulliTable::number(int n) const {
  check_index(n);
  return numbers_[static_cast<std::size_t>(n)];
}

const RationalPolynomial& BernoulliTable::polynomial(int n) const {
  check_index(n);
  return polys_[static_cast<std::size_t>(n)];
}

Rational bernoulli_number(int n) { return BernoulliTable::instance().number(n); }

double bernoulli_poly(int n, double t) {
  const RationalPolynomial& p = BernoulliTable::instance().polynomial(n);
  if (!std::isfinite(t)) throw_error(ErrorKind::kDomain, "bernoulli_poly: non-finite argument");
  return to_double(p(to_rational(t)));
}

double periodic_bernoulli(int n, double t) {
  if (!(t >= 0.0)) throw_error(ErrorKind::kDomain, "periodic_bernoulli: requires t >= 0");
  // t - floor(t) is exact in binary floating point.
  return bernoulli_poly(n, t - std::floor(t));
}

Rational factorial(int n) {
  if (n < 0) throw_error(ErrorKind::kDomain, "factorial of a negative integer");
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

Rational binomial(int n, int k) {
  if (k < 0) return Rational(0);
  Rational acc = 1;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

RationalPolynomial stirling_first(int n) {
  if (n < 0) throw_error(ErrorKind::kDomain, "stirling_first: negative order");
  RationalPolynomial acc = RationalPolynomial::constant(Rational(1));
  for (int i = 0; i < n; ++i) acc *= RationalPolynomial({Rational(-i), Rational(1)});
  return acc;
}

RationalPolynomial binom_poly(int k) {
  if (k < 0) return {};
  return stirling_first(k) * (Rational(1) / factorial(k));
}

std::vector<RationalPolynomial> gnj_coefficients(int n) {
  if (n < 1) throw_error(ErrorKind::kDomain, "gnj_coefficients: n must be positive");
  // Expand prod_{i=0}^{n-2} ((z - i) - u) as a polynomial in u whose
  // coefficients are polynomials in z.
  std::vector<RationalPolynomial> by_u{RationalPolynomial::constant(Rational(1))};
  for (int i = 0; i + 2 <= n; ++i) {
    const RationalPolynomial shifted({Rational(-i), Rational(1)});
    std::vector<RationalPolynomial> next(by_u.size() + 1);
    for (std::size_t j = 0; j < by_u.size(); ++j) {
      next[j] += by_u[j] * shifted;
      next[j + 1] -= by_u[j];
    }
    by_u = std::move(next);
  }
  const Rational scale = Rational(1) / factorial(n - 1);
  for (auto& p : by_u) p *= scale;
  return by_u;
}

RationalPolynomial binom_deriv_poly(int n, int r) {
  if (n < 1 || r < 1) throw_error(ErrorKind::kDomain, "binom_deriv_poly: n and r must be positive");
  RationalPolynomial p = binom_poly(n - 1).derivative(r - 1);
  if ((r - 1) % 2 == 1) p = -p;
  return p;
}

}  // namespace multigamma
