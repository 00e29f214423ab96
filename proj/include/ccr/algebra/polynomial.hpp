// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccr/algebra/number.hpp"

namespace ccr {

/// Interned names of the commuting real parameters. Ids 0 and 1 are always
/// `kappa` and `s`; other names are appended on first use.
class ParamRegistry {
 public:
  static constexpr int kKappa = 0;
  static constexpr int kS = 1;

  static int id(const std::string& name);
  static std::string name(int id);
};

/// Exponent vector indexed by parameter id, with no trailing zeros. The
/// std::vector ordering of trimmed exponent vectors is the lex monomial order
/// with parameter 0 most significant.
using Monomial = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial over Number.
class Poly {
 public:
  using Terms = std::map<Monomial, Number>;

  Poly() = default;
  Poly(Number c);  // NOLINT(google-explicit-constructor)
  static Poly variable(int id, std::uint16_t power = 1);
  static Poly monomial(Monomial m, Number c);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_one() const;
  /// Constant term value when is_constant().
  [[nodiscard]] Number constant() const;
  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  [[nodiscard]] const Number& leading_coefficient() const { return terms_.rbegin()->second; }
  /// Largest parameter id present, or -1 for constants.
  [[nodiscard]] int max_var() const;
  [[nodiscard]] int degree_in(int var) const;
  /// Collects coefficients of var^k as polynomials free of var.
  [[nodiscard]] std::map<int, Poly> coefficients_in(int var) const;
  [[nodiscard]] Poly conj() const;
  /// True when every coefficient is real.
  [[nodiscard]] bool is_real() const;
  [[nodiscard]] std::set<int> vars() const;
  [[nodiscard]] std::complex<double> evaluate(const std::vector<std::optional<double>>& values) const;

  /// Quotient when `divisor` divides this exactly.
  [[nodiscard]] std::optional<Poly> divide_exact(const Poly& divisor) const;
  [[nodiscard]] Poly monic() const;

  /// Grammar-compatible rendering, terms in descending monomial order.
  [[nodiscard]] std::string to_string() const;
  /// Number of additive terms in the rendering.
  [[nodiscard]] std::size_t printed_terms() const;

  void add_term(const Monomial& m, const Number& c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Number& c);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Monic greatest common divisor over the field Q(i, sqrt 2).
Poly gcd(const Poly& a, const Poly& b);

Monomial monomial_mul(const Monomial& a, const Monomial& b);

}  // namespace ccr
