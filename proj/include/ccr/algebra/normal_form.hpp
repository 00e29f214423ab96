// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "ccr/algebra/expr.hpp"
#include "ccr/algebra/presentation.hpp"

namespace ccr {

/// Which reducible adjacent pair the rewriter picks next. The result does not
/// depend on the choice; the alternatives exist to test that.
struct RewriteSchedule {
  enum class Kind { Leftmost, Rightmost, Random };
  Kind kind = Kind::Leftmost;
  std::uint64_t seed = 0;
};

/// Commutator [x, y] for generators with x > y in the generator order, as a
/// multiple of I. Zero for central letters and for equal families.
Scalar bracket_coefficient(const Generator& x, const Generator& y, const Presentation& p);

/// PBW normal form: sorted words only, congruent to e modulo the relations of p.
/// Throws std::invalid_argument for generators not allowed by p.variant or
/// an invalid gram.
Expr normal_form(const Expr& e, const Presentation& p, RewriteSchedule schedule = {});

/// normal_form(x*y - y*x).
Expr commutator(const Expr& x, const Expr& y, const Presentation& p);

/// Anti-linear anti-automorphism: reverses words, conjugates coefficients,
/// swaps ap <-> am and fixes every other generator.
Expr adjoint(const Expr& e);

/// Rewrites in the target basis (a+- = (phi -+ i pi)/r2, or the inverse) and
/// normal-orders.
Expr basis_convert(const Expr& e, Basis target, const Presentation& p);

/// K -> 1 + (s - 1) I and Kinv -> 1 + (1/s - 1) I, then normal_form.
/// Throws std::logic_error unless p.variant is deformed-collapsed.
Expr expand_k(const Expr& e, const Presentation& p);

inline constexpr double kDefaultLimitThreshold = 1e-8;

/// C_{q,c} = (q^c - q^-c) / (c (q - 1/q)); uses its series about q = 1 when
/// |q - 1| < threshold. Throws std::invalid_argument unless q, c > 0.
double deformation_constant(double q, double c, double threshold = kDefaultLimitThreshold);

}  // namespace ccr
