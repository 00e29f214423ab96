// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ccr/algebra/presentation.hpp"
#include "json.hpp"

namespace ccr::cli {

/// Invalid flags, files or parameter values. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string variant = "undeformed";
  std::string basis = "phi-pi";
  std::string flavor = "classical";
  std::size_t d = 2;
  std::size_t nmax = 10;
  std::optional<double> q;
  std::optional<double> c;
  std::size_t degree = 3;
  std::string gram_path;
  std::string kmatrix_path;
  std::uint64_t seed = 42;
  std::size_t samples = 100000;
  std::string output_path;
  std::string format = "json";

  /// Throws ConfigError on a bad value.
  void validate() const;
  /// Replaces the seed with CCR_HOPF_SEED when that is set.
  void apply_environment();

  [[nodiscard]] nlohmann::json to_json() const;
  static CommandConfig from_json(const nlohmann::json& j);

  /// Exact presentation for the symbolic commands. With both q and c set the
  /// presentation carries numeric deformation data.
  [[nodiscard]] Presentation presentation() const;
  [[nodiscard]] bool numeric_mode() const { return q.has_value() && c.has_value(); }
  /// The --gram matrix, or the d x d identity.
  [[nodiscard]] Eigen::MatrixXd numeric_gram() const;
};

/// Reads a square matrix stored as a JSON array of rows. Entries are numbers
/// or strings holding a rational such as "1/2".
std::vector<std::vector<std::string>> read_matrix_file(const std::string& path);

/// "1.5" or "1,0,-2". A single value x means x times the first basis vector.
Eigen::VectorXd parse_vector(const std::string& text, std::size_t d);

}  // namespace ccr::cli
