// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "ccr/algebra/expr.hpp"
#include "ccr/algebra/presentation.hpp"
#include "ccr/hopf/tensor.hpp"

namespace ccr::hopf {

enum class Flavor { Classical, Deformed };

std::string to_string(Flavor f);
/// Accepts "classical" and "deformed"; throws std::invalid_argument otherwise.
Flavor parse_flavor(const std::string& text);

/// Structure maps on generators. Field letters (either basis) and I are
/// covered by both flavors; K and Kinv only by the deformed one.
///
/// Classical: every covered letter is primitive, eps = 0, S = -x.
/// Deformed:  Delta(x) = x ⊗ K + Kinv ⊗ x for field letters, Delta(I) primitive,
///            K and Kinv group-like with eps = 1 and S(K) = Kinv, S(Kinv) = K.
class HopfSpec {
 public:
  explicit HopfSpec(Flavor flavor) : flavor_(flavor) {}
  static HopfSpec classical() { return HopfSpec(Flavor::Classical); }
  static HopfSpec deformed() { return HopfSpec(Flavor::Deformed); }

  [[nodiscard]] Flavor flavor() const { return flavor_; }
  [[nodiscard]] bool covers(const Generator& g) const;

  /// Each throws std::invalid_argument for an uncovered generator.
  [[nodiscard]] TensorExpr coproduct(const Generator& g) const;
  [[nodiscard]] Scalar counit(const Generator& g) const;
  [[nodiscard]] Expr antipode(const Generator& g) const;

  /// The universal R-matrix, which is 1 ⊗ 1 for both flavors.
  [[nodiscard]] static TensorExpr universal_r() { return TensorExpr::unit(2); }

 private:
  Flavor flavor_;
};

/// Multiplicative extension to words, reduced to tensor normal form.
TensorExpr coproduct(const Expr& e, const HopfSpec& h, const Presentation& p);
/// Unreduced multiplicative extension; used to compare images of unreduced
/// representatives.
TensorExpr coproduct_unreduced(const Expr& e, const HopfSpec& h);
/// Multiplicative extension with eps(1) = 1.
Scalar counit(const Expr& e, const HopfSpec& h);
/// Anti-multiplicative extension, then normal_form.
Expr antipode(const Expr& e, const HopfSpec& h, const Presentation& p);

}  // namespace ccr::hopf
