// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccr/cli/config.hpp"
#include "ccr/cli/report.hpp"

namespace ccr::cli {

/// A parsed command line minus the shared configuration.
struct Request {
  /// "normalize", "hopf-check", "fock", ...
  std::string command;
  /// "genfun" for `fock genfun`; empty for flat commands.
  std::string action;
  /// Expression operands, in order.
  std::vector<std::string> operands;
  std::string v = "1";
  std::string w = "1";
  std::string u = "1";
  /// Target basis of `convert`.
  std::string to = "ladder";
  /// Bogoliubov family: fock, uniform, summable or generating (uses --c).
  std::string family = "fock";
  std::optional<double> r;
  /// Random instances for the property-style commands.
  std::size_t count = 20;
  /// Eigenvalues reported by `fock spectrum`.
  std::size_t eigenvalues = 4;
};

/// The command echo stored in reports: `argv` without the program name.
std::vector<std::string> command_echo(int argc, const char* const* argv);

/// Runs one command. Throws ConfigError or ParseError for bad input; other
/// exceptions are downstream failures.
ReportDocument run(const Request& request, const CommandConfig& config);

}  // namespace ccr::cli
