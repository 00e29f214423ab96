// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ccr/hopf/hopf.hpp"

namespace ccr::hopf {

/// Non-zero residual of one instance of an axiom.
struct Counterexample {
  /// The word or relation being tested, in grammar syntax.
  std::string subject;
  /// Which map or side produced the residual, e.g. "coproduct", "left".
  std::string map;
  std::variant<Scalar, Expr, TensorExpr> residual;

  [[nodiscard]] std::string residual_string() const;
};

struct AxiomReport {
  std::string axiom;
  std::size_t degree = 0;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;
  /// Caveats about the structure maps that the verdict depends on.
  std::vector<std::string> notes;

  [[nodiscard]] bool pass() const { return counterexamples.empty(); }
};

/// Finite generator window: modes 0..modes-1 in the presentation basis, I,
/// and K/Kinv when they survive reduction and the flavor covers them.
struct Window {
  std::uint32_t modes = 2;
  std::size_t degree = 3;
};

/// Sorted normal words of degree <= window.degree over the window letters.
std::vector<Word> window_words(const HopfSpec& h, const Presentation& p, const Window& w);

/// Delta(L) - Delta(R), eps(L) - eps(R), S(L) - S(R) for each defining relation
/// L = R of p among the window letters. Only window.modes is used.
AxiomReport check_respects_relations(const HopfSpec& h, const Presentation& p, const Window& w = {});
/// (Delta ⊗ id) Delta(w) - (id ⊗ Delta) Delta(w).
AxiomReport check_coassociativity(const HopfSpec& h, const Presentation& p, const Window& w = {});
/// (eps ⊗ id) Delta(w) - w and (id ⊗ eps) Delta(w) - w.
AxiomReport check_counit(const HopfSpec& h, const Presentation& p, const Window& w = {});
/// m(S ⊗ id) Delta(w) - eps(w) 1 and m(id ⊗ S) Delta(w) - eps(w) 1.
AxiomReport check_antipode(const HopfSpec& h, const Presentation& p, const Window& w = {});
/// Delta(w) - tau Delta(w).
AxiomReport cocommutativity_probe(const HopfSpec& h, const Presentation& p, const Window& w = {});
/// Delta(x y) - Delta(x) Delta(y) for all pairs of window words of positive
/// degree with deg x + deg y <= window.degree, x y the free product.
AxiomReport check_multiplicativity(const HopfSpec& h, const Presentation& p, const Window& w = {});

/// All of the above in a fixed order.
std::vector<AxiomReport> check_all(const HopfSpec& h, const Presentation& p, const Window& w = {});

}  // namespace ccr::hopf
