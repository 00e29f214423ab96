// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/algebra/scalar.hpp"

#include <stdexcept>

namespace ccr {

namespace {

Scalar poly_substitute(const Poly& p, int var, const Scalar& value) {
  Scalar out;
  for (const auto& [k, coeff] : p.coefficients_in(var)) {
    out += Scalar(coeff, Poly(Number(1))) * value.pow(k);
  }
  return out;
}

}  // namespace

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

Scalar Scalar::param(const std::string& name) {
  if (name == "i" || name == "r2") {
    throw std::invalid_argument("'" + name + "' is a reserved constant, not a parameter");
  }
  return Scalar(Poly::variable(ParamRegistry::id(name)), Poly(Number(1)));
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Number(1));
    return;
  }
  if (den_.is_constant()) {
    num_ = num_ * den_.constant().inverse();
    den_ = Poly(Number(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  Number lc_inv = den_.leading_coefficient().inverse();
  num_ = num_ * lc_inv;
  den_ = den_ * lc_inv;
}

Scalar Scalar::conj() const {
  Scalar out;
  out.num_ = num_.conj();
  out.den_ = den_.conj();
  out.normalize();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Scalar Scalar::real_part() const { return (*this + conj()) * Scalar(Rational(1, 2)); }

Scalar Scalar::imag_part() const {
  return (*this - conj()) * Scalar(Number(GaussRational(Rational(0), Rational(-1, 2))));
}

std::set<std::string> Scalar::params() const {
  std::set<std::string> out;
  for (int v : num_.vars()) out.insert(ParamRegistry::name(v));
  for (int v : den_.vars()) out.insert(ParamRegistry::name(v));
  return out;
}

Scalar Scalar::substitute(const std::string& name, const Scalar& value) const {
  const int var = ParamRegistry::id(name);
  if (num_.degree_in(var) == 0 && den_.degree_in(var) == 0) return *this;
  return poly_substitute(num_, var, value) / poly_substitute(den_, var, value);
}

std::complex<double> Scalar::evaluate(const Assignment& values) const {
  std::vector<std::optional<double>> table;
  for (const auto& [name, v] : values) {
    const int id = ParamRegistry::id(name);
    if (static_cast<std::size_t>(id) >= table.size()) table.resize(id + 1);
    table[id] = v;
  }
  return num_.evaluate(table) / den_.evaluate(table);
}

bool Scalar::is_atomic() const { return den_.is_one() && num_.printed_terms() <= 1; }

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.printed_terms() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  return n + "/(" + den_.to_string() + ")";
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar out;
  if (a.den_ == b.den_) {
    out.num_ = a.num_ + b.num_;
    out.den_ = a.den_;
  } else {
    out.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    out.den_ = a.den_ * b.den_;
  }
  if (!out.den_.is_one()) out.normalize();
  return out;
}

Scalar operator-(const Scalar& a) {
  Scalar out = a;
  out.num_ = -a.num_;
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Scalar out;
  out.num_ = a.num_ * b.num_;
  out.den_ = a.den_ * b.den_;
  if (!out.den_.is_one()) out.normalize();
  return out;
}

}  // namespace ccr
