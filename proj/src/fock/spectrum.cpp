// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/fock/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ccr::fock {

namespace {

EigenPairs dense_lowest(const SparseOperator& h, std::size_t k) {
  const Eigen::MatrixXcd dense(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  EigenPairs out;
  const auto n = std::min<Eigen::Index>(static_cast<Eigen::Index>(k), dense.rows());
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values.push_back(solver.eigenvalues()(i));
    out.vectors.emplace_back(solver.eigenvectors().col(i));
  }
  return out;
}

// Two passes over both sets keep the Krylov basis orthogonal to the locked
// vectors to working precision; a single sweep lets their components regrow.
void orthogonalize(StateVector& v, const std::vector<StateVector>& basis, const std::vector<StateVector>& locked) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) v -= q.dot(v) * q;
    for (const auto& q : locked) v -= q.dot(v) * q;
  }
}

struct RitzPair {
  double value;
  StateVector vector;
  double residual;
};

// One Lanczos run from `start`, restricted to the complement of `locked`.
RitzPair lanczos_smallest(const SparseOperator& h, StateVector start, const std::vector<StateVector>& locked,
                          std::size_t steps) {
  std::vector<StateVector> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  orthogonalize(start, {}, locked);
  StateVector v = start.normalized();
  for (std::size_t j = 0; j < steps; ++j) {
    basis.push_back(v);
    StateVector w = h * v;
    alpha.push_back(v.dot(w).real());
    orthogonalize(w, basis, locked);
    const double b = w.norm();
    if (b < 1e-13) break;
    beta.push_back(b);
    v = w / b;
  }
  const auto m = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    t(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri(t);
  const Eigen::VectorXd y = tri.eigenvectors().col(0);
  StateVector x = StateVector::Zero(h.rows());
  for (Eigen::Index i = 0; i < m; ++i) x += y(i) * basis[static_cast<std::size_t>(i)];
  orthogonalize(x, {}, locked);
  x.normalize();
  const double theta = x.dot(h * x).real();
  const double residual = (h * x - theta * x).norm();
  return {theta, x, residual};
}

}  // namespace

EigenPairs lowest_eigenpairs(const SparseOperator& h, std::size_t k, std::size_t dense_limit, double tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("operator must be square");
  const auto dim = static_cast<std::size_t>(h.rows());
  if (dim <= dense_limit) return dense_lowest(h, k);

  EigenPairs out;
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  const std::size_t steps = std::min<std::size_t>(dim, 150);
  for (std::size_t i = 0; i < std::min(k, dim); ++i) {
    StateVector start(h.rows());
    for (Eigen::Index j = 0; j < h.rows(); ++j) start(j) = Complex(gauss(rng), gauss(rng));
    RitzPair best{0.0, start, 0.0};
    for (int restart = 0; restart < 60; ++restart) {
      best = lanczos_smallest(h, start, out.vectors, steps);
      if (best.residual <= tol * std::max(1.0, std::abs(best.value))) break;
      start = best.vector;
    }
    out.values.push_back(best.value);
    out.vectors.push_back(best.vector);
  }
  std::vector<std::size_t> order(out.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return out.values[a] < out.values[b]; });
  EigenPairs sorted;
  for (auto i : order) {
    sorted.values.push_back(out.values[i]);
    sorted.vectors.push_back(out.vectors[i]);
  }
  return sorted;
}

StateVector expv(const SparseOperator& a, const StateVector& x, Complex t, double tol) {
  double norm1 = 0.0;
  for (Eigen::Index c = 0; c < a.outerSize(); ++c) {
    double col = 0.0;
    for (SparseOperator::InnerIterator it(a, c); it; ++it) col += std::abs(it.value());
    norm1 = std::max(norm1, col);
  }
  const double scaled = std::abs(t) * norm1;
  const int steps = std::max(1, static_cast<int>(std::ceil(scaled)));
  const Complex h = t / static_cast<double>(steps);
  StateVector y = x;
  for (int s = 0; s < steps; ++s) {
    StateVector term = y;
    StateVector sum = y;
    for (int k = 1; k < 200; ++k) {
      term = (h / static_cast<double>(k)) * (a * term);
      sum += term;
      if (term.norm() <= tol * sum.norm()) break;
    }
    y = std::move(sum);
  }
  return y;
}

Complex vacuum_generating_function(const ModeSpace& m, const Ladder& l, const ModeVector& v) {
  const FieldPair f = phi_pi_matrices(m, l, v);
  const StateVector vac = m.vacuum();
  return vac.dot(expv(f.phi, vac, Complex(0.0, 1.0)));
}

Complex generating_function(const ModeSpace& m, const Ladder& l, const BogoliubovSpec& spec, const ModeVector& v) {
  const SparseOperator n = number_operator(bogoliubov_ladder(m, l, spec));
  const StateVector theta = lowest_eigenpairs(n, 1).vectors.front();
  const FieldPair f = phi_pi_matrices(m, l, v);
  return theta.dot(expv(f.phi, theta, Complex(0.0, 1.0)));
}

SpectrumReport number_spectrum(const ModeSpace& m, const BogoliubovSpec& spec, std::size_t k, const std::string& name) {
  auto lowest_of = [&](const ModeSpace& space) {
    const Ladder l = ladder_matrices(space);
    const SparseOperator n = number_operator(bogoliubov_ladder(space, l, spec));
    return std::make_pair(lowest_eigenpairs(n, k).values, space.vacuum().dot(n * space.vacuum()).real());
  };
  SpectrumReport r;
  r.name = name;
  r.d = m.modes();
  r.nmax = m.nmax();
  auto [values, expectation] = lowest_of(m);
  r.lowest = std::move(values);
  r.fock_vacuum_expectation = expectation;
  if (m.nmax() >= 2) {
    const ModeSpace coarser(m.modes(), m.nmax() - 2, m.gram());
    const auto coarse = lowest_of(coarser).first;
    r.converged = !coarse.empty() && std::abs(coarse.front() - r.lowest.front()) <= 1e-6 * (1.0 + std::abs(r.lowest.front()));
  }
  return r;
}

double linear_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("slope needs at least two points");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

TrendSeries boundedness_trend(const std::string& name, const BogoliubovFamily& family,
                              const std::vector<std::size_t>& d_range, std::size_t nmax) {
  TrendSeries out;
  out.name = name;
  std::vector<double> ds;
  std::vector<double> mins;
  std::vector<double> expectations;
  for (std::size_t d : d_range) {
    const ModeSpace m(d, nmax);
    out.reports.push_back(number_spectrum(m, family(d), 1, name));
    ds.push_back(static_cast<double>(d));
    mins.push_back(out.reports.back().lowest.front());
    expectations.push_back(out.reports.back().fock_vacuum_expectation);
  }
  if (ds.size() >= 2) {
    out.min_eigenvalue_slope = linear_slope(ds, mins);
    out.vacuum_expectation_slope = linear_slope(ds, expectations);
  }
  return out;
}

}  // namespace ccr::fock
