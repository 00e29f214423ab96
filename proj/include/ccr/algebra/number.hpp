// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace ccr {

using Rational = mpq_class;

/// Parses "n", "-n", "n/m" or a plain decimal "1.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

/// Gaussian rational re + i*im.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] GaussRational conj() const { return {re, -im}; }
  [[nodiscard]] GaussRational inverse() const;

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Element of the field Q(i, sqrt 2), stored as base + root * sqrt(2).
///
/// This is the constant field of every symbolic coefficient: the imaginary
/// unit and the square root needed by the ladder/field basis change both live
/// here, so polynomial arithmetic over it never has to track the relation
/// r2^2 = 2 explicitly.
class Number {
 public:
  Number() = default;
  Number(long v) : base_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Number(Rational v) : base_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Number(GaussRational base, GaussRational root = {})
      : base_(std::move(base)), root_(std::move(root)) {}

  static Number i() { return Number(GaussRational(Rational(0), Rational(1))); }
  static Number sqrt2() { return Number(GaussRational{}, GaussRational(Rational(1))); }

  [[nodiscard]] const GaussRational& base() const { return base_; }
  [[nodiscard]] const GaussRational& root() const { return root_; }

  [[nodiscard]] bool is_zero() const { return base_.is_zero() && root_.is_zero(); }
  [[nodiscard]] bool is_one() const;
  /// Fixed by complex conjugation (sqrt 2 is real).
  [[nodiscard]] bool is_real() const { return sgn(base_.im) == 0 && sgn(root_.im) == 0; }
  [[nodiscard]] Number conj() const { return {base_.conj(), root_.conj()}; }
  /// Throws std::domain_error on zero.
  [[nodiscard]] Number inverse() const;

  [[nodiscard]] std::complex<double> to_complex() const;

  /// Grammar-compatible rendering, e.g. "3/2", "-i", "(1 + r2)".
  /// `bare` is true when the result needs no parentheses as a factor.
  [[nodiscard]] std::string to_string(bool* bare = nullptr) const;

  friend Number operator+(const Number& a, const Number& b) {
    return {a.base_ + b.base_, a.root_ + b.root_};
  }
  friend Number operator-(const Number& a, const Number& b) {
    return {a.base_ - b.base_, a.root_ - b.root_};
  }
  friend Number operator-(const Number& a) { return {-a.base_, -a.root_}; }
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b) { return a * b.inverse(); }
  Number& operator+=(const Number& o) { return *this = *this + o; }
  Number& operator-=(const Number& o) { return *this = *this - o; }
  Number& operator*=(const Number& o) { return *this = *this * o; }
  friend bool operator==(const Number& a, const Number& b) {
    return a.base_ == b.base_ && a.root_ == b.root_;
  }

 private:
  GaussRational base_;
  GaussRational root_;
};

}  // namespace ccr
