// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/algebra/number.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ccr {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational q(text, 10);
    q.canonicalize();
    return q;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  bool negative = !digits.empty() && digits[0] == '-';
  if (negative) digits.erase(0, 1);
  if (digits.empty()) throw std::invalid_argument("malformed decimal literal: " + text);
  std::string denom = "1" + std::string(text.size() - dot - 1, '0');
  Rational q(mpz_class(digits, 10), mpz_class(denom, 10));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

GaussRational GaussRational::inverse() const {
  Rational norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("division by zero");
  return {re / norm, -im / norm};
}

bool Number::is_one() const {
  return root_.is_zero() && sgn(base_.im) == 0 && base_.re == 1;
}

Number operator*(const Number& a, const Number& b) {
  // (x + y r)(z + w r) = (xz + 2yw) + (xw + yz) r, r^2 = 2
  GaussRational two(Rational(2));
  return {a.base_ * b.base_ + two * (a.root_ * b.root_),
          a.base_ * b.root_ + a.root_ * b.base_};
}

Number Number::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // 1/(x + y r) = (x - y r) / (x^2 - 2 y^2)
  GaussRational two(Rational(2));
  GaussRational norm = base_ * base_ - two * (root_ * root_);
  GaussRational inv = norm.inverse();
  return {base_ * inv, -(root_ * inv)};
}

std::complex<double> Number::to_complex() const {
  const double r2 = std::sqrt(2.0);
  return {base_.re.get_d() + r2 * root_.re.get_d(), base_.im.get_d() + r2 * root_.im.get_d()};
}

std::string Number::to_string(bool* bare) const {
  struct Part {
    const Rational* q;
    const char* unit;
  };
  std::vector<Part> parts;
  if (sgn(base_.re) != 0) parts.push_back({&base_.re, ""});
  if (sgn(base_.im) != 0) parts.push_back({&base_.im, "i"});
  if (sgn(root_.re) != 0) parts.push_back({&root_.re, "r2"});
  if (sgn(root_.im) != 0) parts.push_back({&root_.im, "i*r2"});
  if (parts.empty()) {
    if (bare) *bare = true;
    return "0";
  }
  std::string out;
  for (std::size_t n = 0; n < parts.size(); ++n) {
    const Rational& q = *parts[n].q;
    std::string unit = parts[n].unit;
    bool neg = sgn(q) < 0;
    Rational mag = abs(q);
    std::string body;
    if (unit.empty()) {
      body = rational_to_string(mag);
    } else if (mag == 1) {
      body = unit;
    } else {
      body = rational_to_string(mag) + "*" + unit;
    }
    if (n == 0) {
      out += (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  bool single = parts.size() == 1;
  bool plain_positive = single && sgn(*parts[0].q) > 0;
  if (bare) *bare = plain_positive;
  if (single) return out;
  return "(" + out + ")";
}

}  // namespace ccr
