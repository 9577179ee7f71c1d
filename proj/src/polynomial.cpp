// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#include "multigamma/polynomial.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace multigamma {

namespace {

BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

// Quotient |x| = q * 2^-shift with q carrying about `bits` significant bits.
long double scaled_quotient(const Rational& x, unsigned bits) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  const bool negative = num < 0;
  if (negative) num = -num;
  const long shift = static_cast<long>(boost::multiprecision::msb(den)) -
                     static_cast<long>(boost::multiprecision::msb(num)) + static_cast<long>(bits);
  BigInt q = shift >= 0 ? BigInt(num << static_cast<unsigned>(shift)) / den
                        : num / BigInt(den << static_cast<unsigned>(-shift));
  long double v = std::ldexp(q.convert_to<long double>(), static_cast<int>(-shift));
  return negative ? -v : v;
}

}  // namespace

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("to_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{BigInt(scaled)};
  if (exponent >= 0) {
    r *= Rational(pow2(static_cast<unsigned>(exponent)));
  } else {
    r /= Rational(pow2(static_cast<unsigned>(-exponent)));
  }
  return r;
}

double to_double(const Rational& x) {
  if (x == 0) return 0.0;
  return static_cast<double>(scaled_quotient(x, 64));
}

long double to_long_double(const Rational& x) {
  if (x == 0) return 0.0L;
  return scaled_quotient(x, 64);
}

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x);
  if (boost::multiprecision::denominator(x) != 1) os << '/' << boost::multiprecision::denominator(x);
  return os.str();
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::identity() { return monomial(Rational(1), 1); }

Rational RationalPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::derivative(int k) const {
  RationalPolynomial p = *this;
  for (int i = 0; i < k && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::compose_linear(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: acc = acc * (a x + b) + c_i.
  const RationalPolynomial inner({b, a});
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::string RationalPolynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << multigamma::to_string(mag);
      continue;
    }
    if (mag != 1) os << multigamma::to_string(mag) << '*';
    os << variable;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace multigamma
