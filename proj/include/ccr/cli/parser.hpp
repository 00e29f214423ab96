// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ccr/algebra/expr.hpp"
#include "ccr/algebra/presentation.hpp"

namespace ccr::cli {

/// Syntax or vocabulary error with the 0-based column it refers to.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, std::vector<std::string> expected, const std::string& found);
  ParseError(std::size_t column, const std::string& message);

  [[nodiscard]] std::size_t column() const { return column_; }
  [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Parses
///
///   expr   := term (("+" | "-") term)*
///   term   := unary (("*" | "/") unary)*
///   unary  := "-" unary | factor
///   factor := atom ("^" NAT)?
///   atom   := NUMBER | "i" | "kappa" | "s" | "r2" | GEN | "(" expr ")"
///   GEN    := ("phi" | "pi" | "ap" | "am") "(" NAT ")" | "I" | "K" | "Kinv" | "one"
///
/// NUMBER is an unsigned integer or decimal. The divisor of "/" must be a
/// non-zero scalar. When `p` is given, generators it does not allow are
/// rejected.
Expr parse_expr(const std::string& text, const Presentation* p = nullptr);

}  // namespace ccr::cli
