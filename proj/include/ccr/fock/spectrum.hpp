// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ccr/fock/operators.hpp"

namespace ccr::fock {

inline constexpr std::size_t kDenseEigenLimit = 2000;

struct EigenPairs {
  std::vector<double> values;  // ascending
  std::vector<StateVector> vectors;
};

/// Lowest k eigenpairs of a Hermitian operator: dense for dim <= dense_limit,
/// otherwise Lanczos with full reorthogonalization, restarts and explicit
/// deflation of converged vectors (so degenerate eigenvalues are repeated).
EigenPairs lowest_eigenpairs(const SparseOperator& h, std::size_t k, std::size_t dense_limit = kDenseEigenLimit,
                             double tol = 1e-10);

/// exp(t A) x by scaled Taylor series, to relative accuracy tol.
StateVector expv(const SparseOperator& a, const StateVector& x, Complex t = 1.0, double tol = 1e-13);

/// <theta| exp(i phi(v)) |theta> for the Fock vacuum theta.
Complex vacuum_generating_function(const ModeSpace& m, const Ladder& l, const ModeVector& v);

/// Same with theta the ground state of the transformed number operator
/// (the cyclic vector annihilated by every b-).
Complex generating_function(const ModeSpace& m, const Ladder& l, const BogoliubovSpec& spec, const ModeVector& v);

struct SpectrumReport {
  std::string name;
  std::size_t d = 0;
  std::size_t nmax = 0;
  std::vector<double> lowest;
  /// Lowest eigenvalue agrees with the nmax - 2 run to 1e-6.
  bool converged = false;
  /// <Fock vacuum| N |Fock vacuum>; sum of sinh^2 r_k up to truncation.
  double fock_vacuum_expectation = 0.0;
};

SpectrumReport number_spectrum(const ModeSpace& m, const BogoliubovSpec& spec, std::size_t k, const std::string& name);

/// Least-squares slope of ys against xs.
double linear_slope(const std::vector<double>& xs, const std::vector<double>& ys);

using BogoliubovFamily = std::function<BogoliubovSpec(std::size_t d)>;

struct TrendSeries {
  std::string name;
  std::vector<SpectrumReport> reports;
  /// Slope of the minimum eigenvalue against d.
  double min_eigenvalue_slope = 0.0;
  /// Slope of the Fock-vacuum expectation against d.
  double vacuum_expectation_slope = 0.0;
};

/// Minimum of the transformed number operator for each d in d_range at total
/// cutoff nmax.
TrendSeries boundedness_trend(const std::string& name, const BogoliubovFamily& family,
                              const std::vector<std::size_t>& d_range, std::size_t nmax);

}  // namespace ccr::fock
