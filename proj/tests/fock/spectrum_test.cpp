// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/fock/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ccr::fock;

namespace {

// Characteristic function of a centred Gaussian with variance var, by the
// trapezoid rule on a wide grid.
double gaussian_characteristic(double var, double t) {
  const double sd = std::sqrt(var);
  const double h = sd / 200.0;
  double sum = 0.0;
  for (double x = -14.0 * sd; x <= 14.0 * sd; x += h) {
    sum += h * std::cos(t * x) * std::exp(-x * x / (2.0 * var));
  }
  return sum / std::sqrt(2.0 * M_PI * var);
}

}  // namespace

TEST(EigenTest, LanczosMatchesDense) {
  const ModeSpace m(3, 12);
  const Ladder l = ladder_matrices(m);
  const SparseOperator n = number_operator(bogoliubov_ladder(m, l, BogoliubovSpec{{0.3, -0.2, 0.1}}));
  const EigenPairs dense = lowest_eigenpairs(n, 5);
  const EigenPairs lanczos = lowest_eigenpairs(n, 5, 0);
  ASSERT_EQ(lanczos.values.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(lanczos.values[i], dense.values[i], 1e-8);
}

TEST(EigenTest, FockNumberSpectrumCounts) {
  const std::size_t d = 3;
  const std::size_t nmax = 5;
  const ModeSpace m(d, nmax);
  const SparseOperator n = number_operator(ladder_matrices(m));
  const EigenPairs all = lowest_eigenpairs(n, m.dim());
  std::vector<std::size_t> counts(nmax + 1, 0);
  for (double x : all.values) {
    const double k = std::round(x);
    EXPECT_NEAR(x, k, 1e-10);
    ++counts.at(static_cast<std::size_t>(k));
  }
  for (std::size_t k = 0; k <= nmax; ++k) EXPECT_EQ(counts[k], binomial(k + d - 1, d - 1));
  EXPECT_NEAR(all.values.front(), 0.0, 1e-12);
}

TEST(ExpvTest, MatchesDenseExponential) {
  const ModeSpace m(1, 10);
  const FieldPair f = phi_pi_matrices(m, ladder_matrices(m), m.basis_vector(0));
  const Eigen::MatrixXcd h(f.phi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  const Eigen::VectorXcd phases = (Complex(0.0, 0.7) * eig.eigenvalues().cast<Complex>()).array().exp();
  const Eigen::MatrixXcd dense = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  const StateVector x = StateVector::Ones(static_cast<Eigen::Index>(m.dim())).normalized();
  EXPECT_LT((expv(f.phi, x, Complex(0.0, 0.7)) - dense * x).norm(), 1e-12);
}

TEST(GeneratingFunctionTest, ZeroVectorGivesOne) {
  const ModeSpace m(2, 6);
  const Ladder l = ladder_matrices(m);
  EXPECT_EQ(vacuum_generating_function(m, l, ModeVector::Zero(2)), Complex(1.0));
}

TEST(GeneratingFunctionTest, FockVacuumIsGaussian) {
  const ModeSpace m(1, 20);
  const Complex z = vacuum_generating_function(m, ladder_matrices(m), m.basis_vector(0));
  EXPECT_NEAR(z.real(), std::exp(-0.25), 1e-8);
  EXPECT_NEAR(z.imag(), 0.0, 1e-12);
}

TEST(GeneratingFunctionTest, UsesGramNorm) {
  Eigen::MatrixXd g(2, 2);
  g << 1.5, 0.4, 0.4, 0.8;
  const ModeSpace m(2, 24, g);
  ModeVector v(2);
  v << 0.6, -0.9;
  const Complex z = vacuum_generating_function(m, ladder_matrices(m), v);
  EXPECT_NEAR(z.real(), std::exp(-m.inner(v, v) / 4.0), 1e-8);
}

TEST(GeneratingFunctionTest, TruncationErrorDecreases) {
  // Below ~1e-15 the error is roundoff, so later entries may only tie.
  double previous = 1.0;
  for (std::size_t nmax : {5, 10, 20, 40}) {
    const ModeSpace m(1, nmax);
    const double err = std::abs(vacuum_generating_function(m, ladder_matrices(m), m.basis_vector(0)) - std::exp(-0.25));
    EXPECT_LE(err, std::max(previous, 1e-15)) << nmax;
    previous = err;
  }
}

TEST(GeneratingFunctionTest, SqueezedVacuumMatchesGaussianQuadrature) {
  // c^2 = 1: the field is Gaussian with variance c^2, so Z(v) = exp(-c^2/2).
  const double c = 1.0;
  const ModeSpace m(1, 40);
  const Complex z = generating_function(m, ladder_matrices(m), BogoliubovSpec::from_generating_parameter(1, c),
                                        m.basis_vector(0));
  const double oracle = gaussian_characteristic(c * c, 1.0);
  EXPECT_NEAR(oracle, std::exp(-0.5), 1e-12);
  EXPECT_NEAR(z.real(), oracle, 1e-6);
  EXPECT_NEAR(z.imag(), 0.0, 1e-10);
}

TEST(GeneratingFunctionTest, OtherSignWouldGiveWrongVariance) {
  // r = +ln(2c^2)/2 squeezes the wrong quadrature: Z = exp(-1/(8c^2)).
  const double c = 1.0;
  const ModeSpace m(1, 40);
  const Ladder l = ladder_matrices(m);
  const Complex z = generating_function(m, l, BogoliubovSpec::uniform(1, 0.5 * std::log(2.0 * c * c)), m.basis_vector(0));
  EXPECT_NEAR(z.real(), std::exp(-1.0 / (8.0 * c * c)), 1e-6);
}

TEST(SpectrumTest, TransformedNumberIsUnitarilyEquivalentAtFiniteD) {
  // At finite d the transformed ladder is implemented by a unitary, so the
  // ground energy of sum b+ b- stays at zero; sinh^2 r shows up as the Fock
  // vacuum expectation instead.
  const double r = 0.5 * std::log(2.0);
  const ModeSpace m(1, 30);
  const SpectrumReport rep = number_spectrum(m, BogoliubovSpec::uniform(1, r), 3, "uniform");
  EXPECT_NEAR(rep.lowest.front(), 0.0, 1e-8);
  EXPECT_TRUE(rep.converged);
  EXPECT_NEAR(rep.fock_vacuum_expectation, std::sinh(r) * std::sinh(r), 1e-12);
  EXPECT_NEAR(std::sinh(r) * std::sinh(r), 0.125, 1e-15);
  for (std::size_t i = 1; i < rep.lowest.size(); ++i) EXPECT_LE(rep.lowest[i - 1], rep.lowest[i]);
}

TEST(SpectrumTest, TrendOfFockFamilyIsZero) {
  const auto series = boundedness_trend("fock", [](std::size_t d) { return BogoliubovSpec::fock(d); }, {1, 2, 3}, 8);
  ASSERT_EQ(series.reports.size(), 3u);
  for (const auto& rep : series.reports) {
    EXPECT_NEAR(rep.lowest.front(), 0.0, 1e-10);
    EXPECT_TRUE(rep.converged);
  }
  EXPECT_NEAR(series.min_eigenvalue_slope, 0.0, 1e-10);
}

TEST(SpectrumTest, VacuumExpectationGrowsOnlyForUniformFamily) {
  const double r = 0.5 * std::log(2.0);
  const auto uniform =
      boundedness_trend("uniform", [r](std::size_t d) { return BogoliubovSpec::uniform(d, r); }, {1, 2, 3}, 12);
  const auto summable =
      boundedness_trend("summable", [r](std::size_t d) { return BogoliubovSpec::summable(d, r); }, {1, 2, 3}, 12);
  EXPECT_NEAR(uniform.vacuum_expectation_slope, 0.125, 1e-10);
  EXPECT_LT(summable.vacuum_expectation_slope, 0.05);
  double bound = 0.0;
  for (int j = 0; j < 64; ++j) bound += std::pow(std::sinh(std::ldexp(r, -j)), 2);
  for (const auto& rep : summable.reports) EXPECT_LT(rep.fock_vacuum_expectation, bound);
}

TEST(SlopeTest, ExactLine) {
  EXPECT_NEAR(linear_slope({1, 2, 3, 4}, {0.5, 1.0, 1.5, 2.0}), 0.5, 1e-15);
  EXPECT_THROW(linear_slope({1}, {1}), std::invalid_argument);
}
