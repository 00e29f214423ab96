// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccr/algebra/expr.hpp"
#include "ccr/algebra/scalar.hpp"

namespace ccr {

enum class Variant { Undeformed, DeformedStrict, DeformedCollapsed };
enum class Basis { PhiPi, Ladder };

std::string to_string(Variant v);
std::string to_string(Basis b);
Variant parse_variant(const std::string& text);
Basis parse_basis(const std::string& text);

/// Inner products <v_j|v_k> of the mode basis vectors. Entries outside the
/// stored block are Kronecker deltas.
class Gram {
 public:
  Gram() = default;
  /// Row-major n x n block.
  explicit Gram(std::vector<std::vector<Scalar>> block);

  [[nodiscard]] Scalar operator()(std::uint32_t j, std::uint32_t k) const;
  [[nodiscard]] std::size_t block_size() const { return block_.size(); }
  [[nodiscard]] bool is_identity() const;
  /// Throws std::invalid_argument unless the block is square, Hermitian and
  /// real (the field relations [phi, phi'] = 0 need a real form).
  void validate() const;

 private:
  std::vector<std::vector<Scalar>> block_;
};

struct NumericDeformation {
  double q = 1.0;
  double c = 1.0;
};

/// Which quotient of the free algebra is in force.
struct Presentation {
  Variant variant = Variant::Undeformed;
  Basis basis = Basis::PhiPi;
  Gram gram;
  /// Central charge of the deformed CCR; ignored (taken as 1) when undeformed.
  Scalar kappa = Scalar::param("kappa");
  /// Value of q^{c/2}; used by the group-like generators.
  Scalar s = Scalar::param("s");
  /// Whether the relation I*I = I holds.
  bool idempotent_I = true;
  std::optional<NumericDeformation> numeric;

  static Presentation undeformed(Basis basis = Basis::PhiPi);
  /// K, Kinv adjoined as central group-like generators; I is not idempotent.
  static Presentation deformed_strict(Basis basis = Basis::PhiPi);
  /// K, Kinv eliminated through I*I = I.
  static Presentation deformed_collapsed(Basis basis = Basis::PhiPi);

  [[nodiscard]] Scalar effective_kappa() const;
  [[nodiscard]] bool allows(const Generator& g) const;
  /// kappa -> C_{q,c}, s -> q^{c/2} when numeric deformation data is set.
  [[nodiscard]] Assignment numeric_assignment() const;
};

}  // namespace ccr
