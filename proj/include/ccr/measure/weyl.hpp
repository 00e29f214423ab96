// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ccr/algebra/number.hpp"

namespace ccr::measure {

using RationalVector = std::vector<Rational>;
/// Row-major; empty means the identity.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// (v1, v2, lambda) with lambda = exp(i * phase). Phases are kept as exact
/// rationals so composition is exactly associative.
struct WeylElement {
  RationalVector v1;
  RationalVector v2;
  Rational phase{0};

  static WeylElement identity(std::size_t d);
  static WeylElement t(RationalVector v);
  static WeylElement p(RationalVector v);

  [[nodiscard]] std::complex<double> lambda() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.v1 == b.v1 && a.v2 == b.v2 && a.phase == b.phase;
  }
};

/// <v|w> = v^T G w. Throws std::invalid_argument on size mismatch.
Rational rational_form(const RationalVector& v, const RationalVector& w, const RationalMatrix& gram = {});

/// (v1 + v1', v2 + v2', exp(i <v2|v1'>) lambda lambda').
WeylElement weyl_compose(const WeylElement& g, const WeylElement& h, const RationalMatrix& gram = {});

}  // namespace ccr::measure
