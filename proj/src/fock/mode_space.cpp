// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/fock/mode_space.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ccr::fock {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t factor = n - k + i;
    if (out > std::numeric_limits<std::size_t>::max() / factor) throw std::overflow_error("binomial overflow");
    out = out * factor / i;
  }
  return out;
}

FockIndex::FockIndex(std::size_t d, std::size_t nmax) : d_(d), nmax_(nmax) {
  if (d == 0) throw std::invalid_argument("mode count must be positive");
  states_.reserve(binomial(nmax + d, d));
  Occupation n(d, 0);
  // Odometer over occupations with bounded total, last mode fastest.
  std::size_t sum = 0;
  while (true) {
    states_.push_back(n);
    totals_.push_back(sum);
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (sum < nmax) {
        ++n[j];
        ++sum;
        break;
      }
      sum -= n[j];
      n[j] = 0;
      if (j == 0) return;
    }
    if (sum == 0) return;
  }
}

std::optional<std::size_t> FockIndex::find(const Occupation& n) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), n);
  if (it == states_.end() || *it != n) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

ModeSpace::ModeSpace(std::size_t d, std::size_t nmax, Eigen::MatrixXd gram)
    : index_(d, nmax), gram_(gram.size() == 0 ? Eigen::MatrixXd::Identity(d, d) : std::move(gram)) {
  const auto n = static_cast<Eigen::Index>(d);
  if (gram_.rows() != n || gram_.cols() != n) throw std::invalid_argument("gram must be d x d");
  if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + gram_.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("gram is not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gram_);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("gram is not positive definite");
  chol_ = llt.matrixL();
}

double ModeSpace::inner(const ModeVector& v, const ModeVector& w) const { return v.dot(gram_ * w); }

ModeVector ModeSpace::orthonormal_coordinates(const ModeVector& v) const {
  if (v.size() != static_cast<Eigen::Index>(modes())) throw std::invalid_argument("vector has the wrong length");
  return chol_.transpose() * v;
}

ModeVector ModeSpace::basis_vector(std::size_t j) const {
  return ModeVector::Unit(static_cast<Eigen::Index>(modes()), static_cast<Eigen::Index>(j));
}

std::vector<std::size_t> ModeSpace::safe_indices(std::size_t degree) const {
  std::vector<std::size_t> out;
  if (degree > nmax()) return out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (index_.total(i) + degree <= nmax()) out.push_back(i);
  }
  return out;
}

StateVector ModeSpace::vacuum() const {
  return StateVector::Unit(static_cast<Eigen::Index>(dim()), 0);
}

SparseOperator ModeSpace::identity() const {
  SparseOperator id(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
  id.setIdentity();
  return id;
}

double max_abs_on_columns(const SparseOperator& a, const SparseOperator& b, const std::vector<std::size_t>& columns) {
  const SparseOperator diff = a - b;
  double worst = 0.0;
  for (std::size_t c : columns) {
    for (SparseOperator::InnerIterator it(diff, static_cast<Eigen::Index>(c)); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

}  // namespace ccr::fock
