// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "ccr/algebra/number.hpp"
#include "ccr/algebra/polynomial.hpp"

namespace ccr {

/// Numeric values for named real parameters.
using Assignment = std::map<std::string, double>;

/// Exact coefficient: a reduced fraction num/den of polynomials over
/// Q(i, sqrt 2) in commuting real parameters.
///
/// Canonical form: gcd(num, den) = 1 and den is monic in lex order, so
/// structural equality is field equality. Zero is 0/1.
class Scalar {
 public:
  Scalar() : den_(Number(1)) {}
  Scalar(long v) : num_(Number(v)), den_(Number(1)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Number v) : num_(std::move(v)), den_(Number(1)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : Scalar(Number(std::move(v))) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den);

  static Scalar param(const std::string& name);
  static Scalar i() { return Scalar(Number::i()); }
  /// The element r2 with r2^2 = 2.
  static Scalar r2() { return Scalar(Number::sqrt2()); }

  [[nodiscard]] const Poly& numerator() const { return num_; }
  [[nodiscard]] const Poly& denominator() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// True when conjugation fixes this element.
  [[nodiscard]] bool is_real() const { return num_.is_real() && den_.is_real(); }
  [[nodiscard]] Scalar conj() const;
  /// Throws std::domain_error on zero.
  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar pow(int exponent) const;
  /// Real and imaginary parts (parameters are real).
  [[nodiscard]] Scalar real_part() const;
  [[nodiscard]] Scalar imag_part() const;

  [[nodiscard]] std::set<std::string> params() const;
  /// Exact substitution of one parameter.
  [[nodiscard]] Scalar substitute(const std::string& name, const Scalar& value) const;
  /// Throws std::invalid_argument when a needed parameter is unassigned.
  [[nodiscard]] std::complex<double> evaluate(const Assignment& values) const;

  /// Grammar-compatible rendering.
  [[nodiscard]] std::string to_string() const;
  /// True when to_string() is a single product and can be used as a factor.
  [[nodiscard]] bool is_atomic() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ccr
