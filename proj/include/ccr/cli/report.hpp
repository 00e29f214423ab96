// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccr/algebra/expr.hpp"
#include "ccr/hopf/axioms.hpp"
#include "ccr/hopf/tensor.hpp"
#include "json.hpp"

namespace ccr::cli {

/// One pass/fail verdict. Floating checks carry the measured value and the
/// tolerance it was compared against.
struct Check {
  std::string name;
  bool pass = false;
  std::optional<double> value;
  std::optional<double> tolerance;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct ReportDocument {
  std::vector<std::string> command;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks;
  /// Reported deviations that do not affect the exit status.
  nlohmann::json findings = nlohmann::json::array();
  /// Set when a downstream operation threw.
  std::string error;

  [[nodiscard]] bool pass() const;
  /// Adds a check of value <= tolerance.
  void check_below(const std::string& name, double value, double tolerance, const std::string& detail = {});

  [[nodiscard]] nlohmann::json to_json() const;
  /// Inverse of to_json; the summary block is recomputed, not read.
  static ReportDocument from_json(const nlohmann::json& j);
  [[nodiscard]] std::string to_text() const;
};

/// {"re": "...", "im": "..."} with exact components.
nlohmann::json scalar_json(const Scalar& s);
/// Coefficient/word list plus the printed form.
nlohmann::json expr_json(const Expr& e);
/// The same with floating coefficients under the given assignment.
nlohmann::json numeric_expr_json(const Expr& e, const Assignment& values);
nlohmann::json tensor_json(const hopf::TensorExpr& t);
nlohmann::json axiom_json(const hopf::AxiomReport& a);

}  // namespace ccr::cli
