// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ccr/algebra/scalar.hpp"

namespace ccr {

/// Generator families. The enumerator order is the fixed generator order
/// used by normal ordering: I < K < Kinv < Phi(*) < Pi(*) < APlus(*) < AMinus(*).
enum class Tag : std::uint8_t { I, K, Kinv, Phi, Pi, APlus, AMinus };

struct Generator {
  Tag tag = Tag::I;
  std::uint32_t mode = 0;

  static Generator unit_I() { return {Tag::I, 0}; }
  static Generator k() { return {Tag::K, 0}; }
  static Generator k_inv() { return {Tag::Kinv, 0}; }
  static Generator phi(std::uint32_t j) { return {Tag::Phi, j}; }
  static Generator pi(std::uint32_t j) { return {Tag::Pi, j}; }
  static Generator a_plus(std::uint32_t j) { return {Tag::APlus, j}; }
  static Generator a_minus(std::uint32_t j) { return {Tag::AMinus, j}; }

  [[nodiscard]] bool is_field() const { return tag >= Tag::Phi; }
  [[nodiscard]] bool is_group_like() const { return tag == Tag::K || tag == Tag::Kinv; }
  [[nodiscard]] std::string to_string() const;

  auto operator<=>(const Generator&) const = default;
};

/// Product of generators; the empty word is the algebra unit 1.
using Word = std::vector<Generator>;

/// Graded lexicographic order on words (degree first).
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string word_to_string(const Word& w);
bool is_sorted_word(const Word& w);

/// Finite linear combination of words with exact coefficients. No stored
/// coefficient is zero.
class Expr {
 public:
  using Terms = std::map<Word, Scalar, WordOrder>;

  Expr() = default;
  Expr(Scalar c);  // NOLINT(google-explicit-constructor)
  Expr(long c) : Expr(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static Expr generator(Generator g);
  static Expr word(Word w, Scalar c = Scalar(1));

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] std::size_t degree() const;
  /// Coefficient of a word (zero when absent).
  [[nodiscard]] Scalar coefficient(const Word& w) const;
  /// True when only the empty word is present.
  [[nodiscard]] bool is_scalar() const;
  [[nodiscard]] std::set<std::string> params() const;
  [[nodiscard]] std::set<Generator> generators() const;
  [[nodiscard]] Expr substitute(const std::string& name, const Scalar& value) const;

  /// Grammar-compatible rendering; parse_expr(e.to_string()) == e.
  [[nodiscard]] std::string to_string() const;

  void add_term(const Word& w, const Scalar& c);

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator-(const Expr& a);
  /// Free (concatenation) product, extended bilinearly.
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator*(const Scalar& c, const Expr& e);
  friend Expr operator*(const Expr& e, const Scalar& c) { return c * e; }
  friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << e.to_string(); }

/// Expression with complex floating coefficients.
struct NumericExpr {
  std::map<Word, std::complex<double>, WordOrder> terms;

  [[nodiscard]] double max_abs_difference(const NumericExpr& other) const;
};

/// Coefficient-wise evaluation; the word structure is unchanged and exact
/// zeros are dropped. Throws std::invalid_argument on a missing assignment.
NumericExpr evaluate_numeric(const Expr& e, const Assignment& values);

}  // namespace ccr
