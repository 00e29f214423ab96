// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/measure/gaussian.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ccr::measure {

namespace {

Matrix checked_gram(Matrix gram, Eigen::Index n) {
  if (gram.size() == 0) return Matrix::Identity(n, n);
  if (gram.rows() != n || gram.cols() != n) throw std::invalid_argument("gram must match K in size");
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + gram.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("gram is not symmetric");
  }
  if (Eigen::LLT<Matrix>(gram).info() != Eigen::Success) throw std::invalid_argument("gram is not positive definite");
  return gram;
}

}  // namespace

GaussianModel::GaussianModel(Matrix k, Matrix gram) : k_(std::move(k)) {
  if (k_.rows() == 0 || k_.rows() != k_.cols()) throw std::invalid_argument("K must be a non-empty square matrix");
  gram_ = checked_gram(std::move(gram), k_.rows());
  Eigen::FullPivLU<Matrix> lu(k_);
  if (!lu.isInvertible()) throw std::invalid_argument("K is not invertible");
  const Matrix k_inv = lu.inverse();
  const Matrix g_inv = gram_.inverse();
  c_ = k_ * g_inv * k_.transpose() * gram_;
  cov_ = k_inv.transpose() * gram_ * k_inv;
  cov_ = 0.5 * (cov_ + cov_.transpose());
  Eigen::LLT<Matrix> llt(cov_);
  cov_chol_ = llt.matrixL();
  precision_ = k_ * g_inv * k_.transpose();
  precision_ = 0.5 * (precision_ + precision_.transpose());
  const double log_det_cov = 2.0 * cov_chol_.diagonal().array().log().sum();
  log_norm_ = -0.5 * (static_cast<double>(dim()) * std::log(2.0 * M_PI) + log_det_cov);
}

GaussianModel GaussianModel::fock(std::size_t d, Matrix gram) {
  const auto n = static_cast<Eigen::Index>(d);
  return GaussianModel(std::sqrt(2.0) * Matrix::Identity(n, n), std::move(gram));
}

double GaussianModel::covariance_form(const Vector& v) const { return v.dot(cov_ * v); }

double GaussianModel::generating_function(const Vector& v) const { return std::exp(-0.5 * covariance_form(v)); }

double GaussianModel::log_density(const Vector& u) const { return log_norm_ - 0.5 * u.dot(precision_ * u); }

double GaussianModel::density(const Vector& u) const { return std::exp(log_density(u)); }

double GaussianModel::log_cocycle(const Vector& v, const Vector& u) const {
  const Vector cv = c_ * v;
  return -0.25 * covariance_form(cv) - 0.5 * pairing(cv, u);
}

double GaussianModel::cocycle(const Vector& v, const Vector& u) const { return std::exp(log_cocycle(v, u)); }

Vector GaussianModel::sample(const Vector& standard_normal) const { return cov_chol_ * standard_normal; }

double cocycle_identity_residual(const GaussianModel& m, const Vector& v, const Vector& w, const Vector& u) {
  return std::abs(m.cocycle(v + w, u) - m.cocycle(v, u) * m.cocycle(w, u + m.embed(v)));
}

double radon_nikodym_residual(const GaussianModel& m, const Vector& v, const Vector& u) {
  const double a = m.cocycle(v, u);
  return std::abs(m.density(u + m.embed(v)) / m.density(u) - a * a);
}

EtaEstimate eta(const GaussianModel& m, const Vector& v, const Vector& u, double alpha0, std::size_t levels) {
  if (levels < 2 || !(alpha0 > 0.0)) throw std::invalid_argument("eta needs alpha0 > 0 and at least two levels");
  EtaEstimate out;
  std::vector<std::vector<double>> table(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const double alpha = std::ldexp(alpha0, -static_cast<int>(k));
    // a - 1 through expm1 so the difference quotient keeps full precision.
    const double q = std::expm1(m.log_cocycle(alpha * v, u)) / alpha;
    out.alphas.push_back(alpha);
    out.quotients.push_back(q);
    table[k].push_back(q);
    for (std::size_t j = 1; j <= k; ++j) {
      const double factor = std::ldexp(1.0, static_cast<int>(j)) - 1.0;
      table[k].push_back(table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / factor);
    }
  }
  out.value = table[levels - 1][levels - 1];
  out.error_estimate = std::abs(out.value - table[levels - 2][levels - 2]);
  return out;
}

double eta_closed_form(const GaussianModel& m, const Vector& v, const Vector& u) {
  return -0.5 * m.pairing(m.c() * v, u);
}

McEstimate bochner_mc(const GaussianModel& m, const Vector& v, std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  double sum_c = 0.0;
  double sum_s = 0.0;
  double sum_c2 = 0.0;
  double sum_s2 = 0.0;
  Vector z(static_cast<Eigen::Index>(m.dim()));
  for (std::size_t chunk = 0, done = 0; done < samples; ++chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss;
    const std::size_t n = std::min(kMcChunk, samples - done);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& x : z) x = gauss(rng);
      const double t = m.pairing(v, m.sample(z));
      const double c = std::cos(t);
      const double s = std::sin(t);
      sum_c += c;
      sum_s += s;
      sum_c2 += c * c;
      sum_s2 += s * s;
    }
    done += n;
  }
  const double n = static_cast<double>(samples);
  McEstimate out;
  out.samples = samples;
  out.mean = Complex(sum_c / n, sum_s / n);
  const double var_c = std::max(0.0, (sum_c2 - n * out.mean.real() * out.mean.real()) / (n - 1.0));
  const double var_s = std::max(0.0, (sum_s2 - n * out.mean.imag() * out.mean.imag()) / (n - 1.0));
  out.stderr_re = std::sqrt(var_c / n);
  out.stderr_im = std::sqrt(var_s / n);
  return out;
}

QuadratureRule gauss_hermite(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quadrature needs at least one node");
  const auto size = static_cast<Eigen::Index>(n);
  Matrix jacobi = Matrix::Zero(size, size);
  for (Eigen::Index k = 1; k < size; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(static_cast<double>(k) / 2.0);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(jacobi);
  QuadratureRule rule;
  for (Eigen::Index i = 0; i < size; ++i) {
    rule.nodes.push_back(eig.eigenvalues()(i));
    const double v0 = eig.eigenvectors()(0, i);
    rule.weights.push_back(std::sqrt(M_PI) * v0 * v0);
  }
  return rule;
}

Complex bochner_quadrature(const GaussianModel& m, double v, std::size_t nodes) {
  if (m.dim() != 1) throw std::invalid_argument("quadrature cross-check is one-dimensional");
  const QuadratureRule rule = gauss_hermite(nodes);
  const double scale = std::sqrt(2.0 * m.covariance()(0, 0));
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::exp(Complex(0.0, v * scale * rule.nodes[i]));
  }
  return sum / std::sqrt(M_PI);
}

double positive_definiteness_check(const GeneratingFunction& z, const std::vector<Vector>& vectors) {
  const auto n = static_cast<Eigen::Index>(vectors.size());
  if (n == 0) throw std::invalid_argument("need at least one vector");
  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      gram(i, j) = z(vectors[static_cast<std::size_t>(i)] - vectors[static_cast<std::size_t>(j)]);
    }
  }
  const Eigen::MatrixXcd hermitian = 0.5 * (gram + gram.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(hermitian, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

GeneratingFunction z_c(double c, Matrix gram) {
  return [c, gram = std::move(gram)](const Vector& v) {
    const double norm2 = gram.size() == 0 ? v.squaredNorm() : v.dot(gram * v);
    return Complex(std::exp(-0.5 * c * c * norm2));
  };
}

}  // namespace ccr::measure
