// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ccr/algebra/number.hpp"

namespace ccr::cli {

namespace {

std::string entry_text(const nlohmann::json& e, const std::string& path) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number()) return e.dump();
  throw ConfigError(path + ": matrix entries must be numbers or rational strings");
}

double rational_value(const std::string& text, const std::string& where) {
  try {
    return parse_rational(text).get_d();
  } catch (const std::exception&) {
  }
  // Exponent notation is fine where only a double is needed.
  std::size_t used = 0;
  try {
    const double x = std::stod(text, &used);
    if (used == text.size()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError(where + ": '" + text + "' is not a number");
}

}  // namespace

void CommandConfig::validate() const {
  try {
    parse_variant(variant);
    parse_basis(basis);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (flavor != "classical" && flavor != "deformed") throw ConfigError("flavor must be classical or deformed");
  if (d == 0) throw ConfigError("--d must be positive");
  if (nmax == 0) throw ConfigError("--nmax must be positive");
  if (q && !(*q > 0.0)) throw ConfigError("--q must be positive");
  if (c && !(*c > 0.0)) throw ConfigError("--c must be positive");
  if (samples < 2) throw ConfigError("--samples must be at least 2");
  if (format != "json" && format != "text") throw ConfigError("--format must be json or text");
}

void CommandConfig::apply_environment() {
  const char* env = std::getenv("CCR_HOPF_SEED");
  if (env == nullptr || *env == '\0') return;
  std::size_t used = 0;
  try {
    const unsigned long long value = std::stoull(env, &used, 10);
    if (used != std::string(env).size() || std::string(env).front() == '-') throw std::invalid_argument("seed");
    seed = value;
  } catch (const std::exception&) {
    throw ConfigError(std::string("CCR_HOPF_SEED='") + env + "' is not an unsigned integer");
  }
}

nlohmann::json CommandConfig::to_json() const {
  nlohmann::json j = {{"variant", variant}, {"basis", basis},   {"flavor", flavor},   {"d", d},
                      {"nmax", nmax},       {"degree", degree}, {"gram", gram_path},  {"kmatrix", kmatrix_path},
                      {"seed", seed},       {"samples", samples}, {"output", output_path}, {"format", format}};
  j["q"] = q ? nlohmann::json(*q) : nlohmann::json(nullptr);
  j["c"] = c ? nlohmann::json(*c) : nlohmann::json(nullptr);
  return j;
}

CommandConfig CommandConfig::from_json(const nlohmann::json& j) {
  CommandConfig out;
  out.variant = j.at("variant").get<std::string>();
  out.basis = j.at("basis").get<std::string>();
  out.flavor = j.at("flavor").get<std::string>();
  out.d = j.at("d").get<std::size_t>();
  out.nmax = j.at("nmax").get<std::size_t>();
  out.degree = j.at("degree").get<std::size_t>();
  out.gram_path = j.at("gram").get<std::string>();
  out.kmatrix_path = j.at("kmatrix").get<std::string>();
  out.seed = j.at("seed").get<std::uint64_t>();
  out.samples = j.at("samples").get<std::size_t>();
  out.output_path = j.at("output").get<std::string>();
  out.format = j.at("format").get<std::string>();
  if (!j.at("q").is_null()) out.q = j.at("q").get<double>();
  if (!j.at("c").is_null()) out.c = j.at("c").get<double>();
  return out;
}

Presentation CommandConfig::presentation() const {
  const Basis b = parse_basis(basis);
  Presentation p;
  switch (parse_variant(variant)) {
    case Variant::Undeformed: p = Presentation::undeformed(b); break;
    case Variant::DeformedStrict: p = Presentation::deformed_strict(b); break;
    case Variant::DeformedCollapsed: p = Presentation::deformed_collapsed(b); break;
  }
  if (!gram_path.empty()) {
    std::vector<std::vector<Scalar>> block;
    for (const auto& row : read_matrix_file(gram_path)) {
      block.emplace_back();
      for (const auto& text : row) {
        try {
          block.back().emplace_back(parse_rational(text));
        } catch (const std::exception&) {
          throw ConfigError(gram_path + ": '" + text + "' is not a rational number");
        }
      }
    }
    p.gram = Gram(std::move(block));
    try {
      p.gram.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(gram_path + ": " + e.what());
    }
  }
  if (numeric_mode()) p.numeric = NumericDeformation{*q, *c};
  return p;
}

Eigen::MatrixXd CommandConfig::numeric_gram() const {
  const auto n = static_cast<Eigen::Index>(d);
  if (gram_path.empty()) return Eigen::MatrixXd::Identity(n, n);
  const auto rows = read_matrix_file(gram_path);
  if (rows.size() != d) {
    throw ConfigError(gram_path + ": gram is " + std::to_string(rows.size()) + " x " + std::to_string(rows.size()) +
                      " but --d is " + std::to_string(d));
  }
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) g(j, k) = rational_value(rows[j][k], gram_path);
  }
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw ConfigError(gram_path + ": gram is not symmetric");
  if (Eigen::LLT<Eigen::MatrixXd>(g).info() != Eigen::Success) {
    throw ConfigError(gram_path + ": gram is not positive definite");
  }
  return g;
}

std::vector<std::vector<std::string>> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!j.is_array() || j.empty()) throw ConfigError(path + ": expected a non-empty array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw ConfigError(path + ": matrix must be square");
    rows.emplace_back();
    for (const auto& e : row) rows.back().push_back(entry_text(e, path));
  }
  return rows;
}

Eigen::VectorXd parse_vector(const std::string& text, std::size_t d) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      values.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw ConfigError("'" + text + "' is not a comma-separated list of numbers");
  }
  const auto n = static_cast<Eigen::Index>(d);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  if (values.size() == 1) {
    v(0) = values[0];
  } else if (values.size() == d) {
    for (Eigen::Index k = 0; k < n; ++k) v(k) = values[static_cast<std::size_t>(k)];
  } else {
    throw ConfigError("vector '" + text + "' has " + std::to_string(values.size()) + " entries, expected 1 or " +
                      std::to_string(d));
  }
  return v;
}

}  // namespace ccr::cli
