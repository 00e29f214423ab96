// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ccr/algebra/expr.hpp"
#include "ccr/fock/mode_space.hpp"

namespace ccr::fock {

/// Ladder operators of the orthonormalized modes.
struct Ladder {
  std::vector<SparseOperator> raise;  // a+_k
  std::vector<SparseOperator> lower;  // a-_k
};

/// a-_k |n> = sqrt(n_k) |n - e_k>, a+_k |n> = sqrt(n_k + 1) |n + e_k>, with
/// states above the cutoff dropped.
Ladder ladder_matrices(const ModeSpace& m);

/// a+(v) = sum_k (L^T v)_k a+_k and a-(v) = sum_k (L^T v)_k a-_k for real v.
SparseOperator creation(const ModeSpace& m, const Ladder& l, const ModeVector& v);
SparseOperator annihilation(const ModeSpace& m, const Ladder& l, const ModeVector& v);

/// phi(v) = (a+(v) + a-(v)) / sqrt 2, pi(v) = i (a+(v) - a-(v)) / sqrt 2.
struct FieldPair {
  SparseOperator phi;
  SparseOperator pi;
};
FieldPair phi_pi_matrices(const ModeSpace& m, const Ladder& l, const ModeVector& v);

/// Squeezing per orthonormal mode. b-_k = cosh(r_k) a-_k + sinh(r_k) a+_k.
///
/// Conventions: gamma = exp(-2 r) is the ratio of the field variance to its
/// Fock value, and the generating function exp(-(c^2/2) |v|^2) corresponds to
/// gamma = 2 c^2, i.e. r = -ln(2 c^2) / 2. c^2 = 1/2 is the Fock point.
struct BogoliubovSpec {
  std::vector<double> r;

  static BogoliubovSpec fock(std::size_t d) { return {std::vector<double>(d, 0.0)}; }
  static BogoliubovSpec uniform(std::size_t d, double r);
  /// r_j = r * 2^-j.
  static BogoliubovSpec summable(std::size_t d, double r);
  static BogoliubovSpec from_generating_parameter(std::size_t d, double c);

  [[nodiscard]] std::vector<double> gamma() const;
  static double r_from_c(double c);
  static double gamma_from_r(double r);
};

/// b+_k, b-_k built from the truncated ladder matrices.
Ladder bogoliubov_ladder(const ModeSpace& m, const Ladder& l, const BogoliubovSpec& spec);

/// N = sum_k b+_k b-_k for the given ladder (Fock or transformed).
SparseOperator number_operator(const Ladder& l);

/// The deformed representation: phi unchanged, pi scaled by C_{q,c}, I -> 1.
struct TransferRep {
  double q = 1.0;
  double c = 1.0;
  double pi_scale = 1.0;
};
TransferRep transfer_rep(double q, double c);
FieldPair transfer_fields(const ModeSpace& m, const Ladder& l, const TransferRep& rep, const ModeVector& v);

/// Images of generators: pi(j) -> pi_scale * pi(v_j), phi(j) -> phi(v_j),
/// ap/am through phi and pi, I -> 1, K -> k_value * 1, Kinv -> 1/k_value.
struct Representation {
  double pi_scale = 1.0;
  double k_value = 1.0;
};

/// Matrix of an expression: words become products of truncated matrices and
/// coefficients are evaluated with `values`. Throws std::invalid_argument for
/// modes outside the space or unassigned parameters.
SparseOperator represent(const Expr& e, const ModeSpace& m, const Ladder& l, const Assignment& values,
                         const Representation& rep = {});

}  // namespace ccr::fock
