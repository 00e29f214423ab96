// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ccr::fock {

using Complex = std::complex<double>;
using SparseOperator = Eigen::SparseMatrix<Complex>;
using StateVector = Eigen::VectorXcd;
/// Real coordinates of a vector in the mode basis v_0..v_{d-1}.
using ModeVector = Eigen::VectorXd;

/// Occupation-number basis with total occupation <= nmax, in lexicographic
/// order of (n_0, ..., n_{d-1}). Index 0 is the vacuum.
class FockIndex {
 public:
  using Occupation = std::vector<unsigned>;

  FockIndex(std::size_t d, std::size_t nmax);

  [[nodiscard]] std::size_t modes() const { return d_; }
  [[nodiscard]] std::size_t nmax() const { return nmax_; }
  [[nodiscard]] std::size_t size() const { return states_.size(); }
  [[nodiscard]] const Occupation& state(std::size_t i) const { return states_[i]; }
  [[nodiscard]] std::size_t total(std::size_t i) const { return totals_[i]; }
  [[nodiscard]] std::optional<std::size_t> find(const Occupation& n) const;

 private:
  std::size_t d_;
  std::size_t nmax_;
  std::vector<Occupation> states_;
  std::vector<std::size_t> totals_;
};

/// binomial(n, k) as a double-free integer; throws std::overflow_error.
std::size_t binomial(std::size_t n, std::size_t k);

/// d modes with inner products gram(j, k) = <v_j|v_k>, truncated at total
/// occupation nmax. Operators act in Cholesky-orthonormalized modes: with
/// gram = L L^T, a vector with mode coordinates v has orthonormal
/// coordinates L^T v.
class ModeSpace {
 public:
  /// Throws std::invalid_argument unless gram is d x d, symmetric and
  /// positive definite. An empty gram means the identity.
  ModeSpace(std::size_t d, std::size_t nmax, Eigen::MatrixXd gram = {});

  [[nodiscard]] std::size_t modes() const { return index_.modes(); }
  [[nodiscard]] std::size_t nmax() const { return index_.nmax(); }
  [[nodiscard]] std::size_t dim() const { return index_.size(); }
  [[nodiscard]] const FockIndex& index() const { return index_; }
  [[nodiscard]] const Eigen::MatrixXd& gram() const { return gram_; }

  [[nodiscard]] double inner(const ModeVector& v, const ModeVector& w) const;
  [[nodiscard]] ModeVector orthonormal_coordinates(const ModeVector& v) const;
  /// The vector v_j.
  [[nodiscard]] ModeVector basis_vector(std::size_t j) const;

  /// States with total occupation <= nmax - degree, where products of up to
  /// `degree` ladder operators are not affected by the cutoff.
  [[nodiscard]] std::vector<std::size_t> safe_indices(std::size_t degree) const;
  [[nodiscard]] StateVector vacuum() const;
  [[nodiscard]] SparseOperator identity() const;

 private:
  FockIndex index_;
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd chol_;
};

/// Largest |entry| of a - b restricted to the given columns.
double max_abs_on_columns(const SparseOperator& a, const SparseOperator& b, const std::vector<std::size_t>& columns);

}  // namespace ccr::fock
