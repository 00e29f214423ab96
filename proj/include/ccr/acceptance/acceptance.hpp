// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

// The acceptance criteria as executable checks, shared by the acceptance
// binary and the `selftest` subcommand.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ccr::acceptance {

inline constexpr int kCriterionCount = 13;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// One-line summary of what was measured.
  std::string detail;
  /// Measured values; every float is stored with its tolerance.
  nlohmann::json metrics = nlohmann::json::object();
};

std::string criterion_title(int id);

/// Runs criterion id (1-based). All randomness derives from (seed, id).
/// Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Criteria 1..12 serialized in order; the determinism criterion compares two
/// of these byte for byte.
nlohmann::json suite_report(std::uint64_t seed);

std::vector<CriterionResult> run_all(std::uint64_t seed);

nlohmann::json to_json(const CriterionResult& r);

}  // namespace ccr::acceptance
