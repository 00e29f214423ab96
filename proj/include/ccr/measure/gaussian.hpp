// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace ccr::measure {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Centred Gaussian measure on the dual R^d whose Fourier transform is
/// exp(-M_K(v)/2), M_K(v) = <K^-1 v | K^-1 v>.
///
/// Coordinates: <v|w> = v^T G w on V, the pairing <v, u> = v^T u, and the
/// embedding u_v = G v. With K* = G^-1 K^T G the adjoint for <.|.>,
/// C = K K* and the covariance of u is K^-T G K^-1.
class GaussianModel {
 public:
  /// Throws std::invalid_argument unless K is square and invertible and G is
  /// symmetric positive definite of the same size. An empty gram means 1.
  explicit GaussianModel(Matrix k, Matrix gram = {});

  /// K = sqrt(2) * 1 with gram G: the Fock measure.
  static GaussianModel fock(std::size_t d, Matrix gram = {});

  [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(k_.rows()); }
  [[nodiscard]] const Matrix& k() const { return k_; }
  [[nodiscard]] const Matrix& gram() const { return gram_; }
  [[nodiscard]] const Matrix& c() const { return c_; }
  [[nodiscard]] const Matrix& covariance() const { return cov_; }

  [[nodiscard]] double inner(const Vector& v, const Vector& w) const { return v.dot(gram_ * w); }
  [[nodiscard]] double pairing(const Vector& v, const Vector& u) const { return v.dot(u); }
  [[nodiscard]] Vector embed(const Vector& v) const { return gram_ * v; }

  [[nodiscard]] double covariance_form(const Vector& v) const;
  /// Z_K(v) = exp(-M_K(v)/2).
  [[nodiscard]] double generating_function(const Vector& v) const;
  /// Normalized density at u.
  [[nodiscard]] double density(const Vector& u) const;
  [[nodiscard]] double log_density(const Vector& u) const;

  /// log a_K(v, u) = -M_K(Cv)/4 - <Cv, u>/2.
  [[nodiscard]] double log_cocycle(const Vector& v, const Vector& u) const;
  [[nodiscard]] double cocycle(const Vector& v, const Vector& u) const;

  /// Draws from the measure: u = chol(cov) z.
  [[nodiscard]] Vector sample(const Vector& standard_normal) const;

 private:
  Matrix k_;
  Matrix gram_;
  Matrix c_;
  Matrix cov_;
  Matrix cov_chol_;
  Matrix precision_;
  double log_norm_ = 0.0;
};

/// |a(v+v', u) - a(v, u) a(v', u + u_v)|.
double cocycle_identity_residual(const GaussianModel& m, const Vector& v, const Vector& w, const Vector& u);

/// |density(u + u_v) / density(u) - a(v, u)^2|.
double radon_nikodym_residual(const GaussianModel& m, const Vector& v, const Vector& u);

struct EtaEstimate {
  double value = 0.0;
  /// |last - previous| on the Richardson diagonal.
  double error_estimate = 0.0;
  std::vector<double> alphas;
  std::vector<double> quotients;
};

/// lim alpha^-1 (a(alpha v, u) - 1) over alpha_k = alpha0 2^-k, k < levels,
/// extrapolated by Richardson's scheme.
EtaEstimate eta(const GaussianModel& m, const Vector& v, const Vector& u, double alpha0 = 0.125,
                std::size_t levels = 8);

/// -<Cv, u>/2.
double eta_closed_form(const GaussianModel& m, const Vector& v, const Vector& u);

struct McEstimate {
  Complex mean;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo estimate of the Fourier transform int exp(i<v,u>) dmu(u).
/// Samples are drawn in fixed-size chunks, each from its own generator seeded
/// by mixing (seed, chunk index), so the result depends only on the seed.
McEstimate bochner_mc(const GaussianModel& m, const Vector& v, std::size_t samples, std::uint64_t seed);

inline constexpr std::size_t kMcChunk = 4096;

/// Gauss-Hermite rule for the weight exp(-x^2), by Golub-Welsch.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_hermite(std::size_t n);

/// d = 1: int exp(i v u) dmu(u) by n-point Gauss-Hermite quadrature.
Complex bochner_quadrature(const GaussianModel& m, double v, std::size_t nodes = 64);

using GeneratingFunction = std::function<Complex(const Vector&)>;

/// Minimum eigenvalue of the Hermitian matrix Z(v_i - v_j).
double positive_definiteness_check(const GeneratingFunction& z, const std::vector<Vector>& vectors);

/// exp(-(c^2/2) <v|v>).
GeneratingFunction z_c(double c, Matrix gram);

}  // namespace ccr::measure
