// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/measure/functional.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ccr/fock/operators.hpp"

using namespace ccr::measure;

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t d, double sd = 1.0) {
  std::normal_distribution<double> g(0.0, sd);
  Vector v(static_cast<Eigen::Index>(d));
  for (auto& x : v) x = g(rng);
  return v;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t d, unsigned max_degree = 3) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::normal_distribution<double> g;
  Polynomial p(d);
  for (int t = 0; t < 4; ++t) {
    Polynomial::Exponents e(d, 0);
    unsigned budget = deg(rng);
    for (unsigned k = 0; k < budget; ++k) ++e[rng() % d];
    p.add_term(e, Complex(g(rng), g(rng)));
  }
  return p;
}

TestFunction random_test_function(std::mt19937_64& rng, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix b = Matrix::Zero(n, n);
  std::normal_distribution<double> g(0.0, 0.4);
  for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = g(rng);
  Matrix a = b * b.transpose();
  a = 0.5 * (a + a.transpose());
  ComplexVector beta(n);
  for (auto& x : beta) x = Complex(g(rng), g(rng));
  return {random_polynomial(rng, d), a, beta, Complex(g(rng), g(rng))};
}

std::vector<FunctionalRep> reps(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  Matrix k = Matrix::Identity(n, n) * 1.2;
  k(0, n - 1) += 0.3;
  Matrix gram = Matrix::Identity(n, n);
  if (d > 1) gram(0, 1) = gram(1, 0) = 0.25;
  return {FunctionalRep(GaussianModel::fock(d)), FunctionalRep(GaussianModel(k, gram))};
}

}  // namespace

TEST(PolynomialTest, TranslateMatchesShiftedEvaluation) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = random_polynomial(rng, 3);
    const Vector u = random_vector(rng, 3);
    const Vector w = random_vector(rng, 3);
    EXPECT_LT(std::abs(p.translate(w).evaluate(u) - p.evaluate(u + w)), 1e-12);
  }
}

TEST(TestFunctionTest, DirectionalDerivativeMatchesFiniteDifference) {
  std::mt19937_64 rng(2);
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    const TestFunction f = random_test_function(rng, 2);
    const Vector u = random_vector(rng, 2);
    const Vector w = random_vector(rng, 2);
    const Complex fd = (f.evaluate(u + h * w) - f.evaluate(u - h * w)) / (2.0 * h);
    EXPECT_LT(std::abs(f.directional(w).evaluate(u) - fd), 1e-7 * std::max(1.0, std::abs(fd)));
  }
}

TEST(TestFunctionTest, TranslationAndPhaseAreExact) {
  std::mt19937_64 rng(3);
  const TestFunction f = random_test_function(rng, 2);
  const Vector u = random_vector(rng, 2);
  const Vector w = random_vector(rng, 2);
  EXPECT_LT(std::abs(f.translate(w).evaluate(u) - f.evaluate(u + w)), 1e-12 * std::abs(f.evaluate(u + w)) + 1e-14);
  const Complex expected = std::polar(1.0, w.dot(u)) * f.evaluate(u);
  EXPECT_LT(std::abs(f.phase(w).evaluate(u) - expected), 1e-12 * std::abs(expected) + 1e-14);
}

TEST(TestFunctionTest, DerivativeOfLinearFunctionalIsTheForm) {
  // delta_v <v', u> = <v'|v>, with no rounding beyond one product.
  const FunctionalRep rep = reps(2)[1];
  const Vector v = (Vector(2) << 0.5, -1.25).finished();
  const Vector w = (Vector(2) << 2.0, 0.75).finished();
  const TestFunction lin(Polynomial::linear(w));
  const TestFunction d = rep.delta(v, lin);
  ASSERT_EQ(d.polynomial().degree(), 0u);
  EXPECT_DOUBLE_EQ(d.polynomial().terms().begin()->second.real(), rep.model().inner(w, v));
}

TEST(TestFunctionTest, RejectsMixedGaussians) {
  std::mt19937_64 rng(4);
  EXPECT_THROW(random_test_function(rng, 2) + random_test_function(rng, 2), std::invalid_argument);
}

TEST(WeylRelationTest, HoldsPointwise) {
  std::mt19937_64 rng(5);
  const FunctionalRep rep(GaussianModel::fock(2));
  for (int i = 0; i < 100; ++i) {
    const TestFunction f = random_test_function(rng, 2);
    EXPECT_LT(weyl_relation_residual(rep, random_vector(rng, 2), random_vector(rng, 2), f, random_vector(rng, 2)),
              1e-10);
  }
  for (const auto& other : reps(3)) {
    const TestFunction f = random_test_function(rng, 3);
    EXPECT_LT(weyl_relation_residual(other, random_vector(rng, 3), random_vector(rng, 3), f, random_vector(rng, 3)),
              1e-10);
  }
}

TEST(WeylRelationTest, DegenerateArguments) {
  std::mt19937_64 rng(6);
  const FunctionalRep rep = reps(2)[1];
  const TestFunction f = random_test_function(rng, 2);
  const Vector u = random_vector(rng, 2);
  const Vector w = random_vector(rng, 2);
  const Vector zero = Vector::Zero(2);
  EXPECT_LT(std::abs(rep.p(zero, rep.t(w, f)).evaluate(u) - rep.t(w, f).evaluate(u)), 1e-13);
  EXPECT_LT(std::abs(rep.p(w, rep.t(zero, f)).evaluate(u) - rep.p(w, f).evaluate(u)), 1e-13);
}

TEST(WeylRelationTest, OneParameterGroups) {
  std::mt19937_64 rng(7);
  const FunctionalRep rep = reps(2)[1];
  const TestFunction f = random_test_function(rng, 2);
  const Vector u = random_vector(rng, 2);
  const Vector v = random_vector(rng, 2);
  const Vector w = random_vector(rng, 2);
  EXPECT_LT(std::abs(rep.p(v, rep.p(w, f)).evaluate(u) - rep.p(v + w, f).evaluate(u)), 1e-10);
  EXPECT_LT(std::abs(rep.t(v, rep.t(w, f)).evaluate(u) - rep.t(v + w, f).evaluate(u)), 1e-12);
}

TEST(FunctionalOperatorTest, CanonicalCommutator) {
  std::mt19937_64 rng(8);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& rep : reps(d)) {
      for (int i = 0; i < 20; ++i) {
        const TestFunction f = random_test_function(rng, d);
        EXPECT_LT(functional_operator_residual(rep, random_vector(rng, d), random_vector(rng, d), f,
                                               random_vector(rng, d)),
                  1e-10);
      }
    }
  }
}

TEST(FunctionalOperatorTest, ConstantIsTheFockVacuum) {
  std::mt19937_64 rng(9);
  const FunctionalRep rep(GaussianModel::fock(2));
  const TestFunction one(Polynomial::constant(2, 1.0));
  for (int i = 0; i < 10; ++i) {
    const TestFunction lowered = rep.a_minus(random_vector(rng, 2), one);
    EXPECT_LT(std::abs(lowered.evaluate(random_vector(rng, 2))), 1e-14);
  }
  // Not so for another covariance.
  const FunctionalRep squeezed(GaussianModel(Matrix::Identity(2, 2)));
  EXPECT_GT(std::abs(squeezed.a_minus(Vector::Ones(2), one).evaluate(Vector::Ones(2))), 0.1);
}

TEST(FockCrossCheckTest, NumberBasisIsOrthonormal) {
  const FunctionalRep rep(GaussianModel::fock(1));
  const auto basis = number_basis(rep, 12);
  const Eigen::MatrixXcd g = quadrature_gram(rep.model(), basis, basis);
  EXPECT_LT((g - Eigen::MatrixXcd::Identity(13, 13)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(FockCrossCheckTest, FieldMatrixElementsMatchLadderMatrices) {
  const std::size_t n = 15;
  const FunctionalRep rep(GaussianModel::fock(1));
  const auto basis = number_basis(rep, n);
  std::vector<TestFunction> phi_basis;
  std::vector<TestFunction> pi_basis;
  const Vector e = Vector::Ones(1);
  for (const auto& f : basis) {
    phi_basis.push_back(rep.phi(e, f));
    pi_basis.push_back(rep.pi(e, f));
  }
  const ccr::fock::ModeSpace m(1, n);
  const auto fields = ccr::fock::phi_pi_matrices(m, ccr::fock::ladder_matrices(m), m.basis_vector(0));
  const Eigen::MatrixXcd phi_q = quadrature_gram(rep.model(), basis, phi_basis);
  const Eigen::MatrixXcd pi_q = quadrature_gram(rep.model(), basis, pi_basis);
  EXPECT_LT((phi_q - Eigen::MatrixXcd(fields.phi)).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((pi_q - Eigen::MatrixXcd(fields.pi)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(FockCrossCheckTest, WeylOperatorIsUnitary) {
  std::mt19937_64 rng(10);
  const FunctionalRep rep(GaussianModel(Matrix::Constant(1, 1, 0.8)));
  const TestFunction f(random_polynomial(rng, 1));
  const Vector v = Vector::Constant(1, 0.6);
  const double before = quadrature_gram(rep.model(), {f}, {f})(0, 0).real();
  const TestFunction pf = rep.p(v, f);
  const double after = quadrature_gram(rep.model(), {pf}, {pf})(0, 0).real();
  EXPECT_NEAR(after, before, 1e-9 * before);
}
