// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "ccr/algebra/scalar.hpp"
#include "random_expr.hpp"

using namespace ccr;

namespace {

Scalar kappa() { return Scalar::param("kappa"); }
Scalar s() { return Scalar::param("s"); }

Scalar random_rational_function(std::mt19937_64& rng) {
  Scalar num = gen::random_scalar(rng) + gen::random_scalar(rng) * s() * s();
  Scalar den = gen::random_scalar(rng) * kappa() + gen::random_scalar(rng, false);
  if (den.is_zero()) den = Scalar(1);
  return num / den;
}

}  // namespace

TEST(NumberTest, SqrtTwoSquaresToTwo) {
  EXPECT_EQ(Number::sqrt2() * Number::sqrt2(), Number(2));
  EXPECT_EQ(Number::i() * Number::i(), Number(-1));
}

TEST(NumberTest, InverseOfMixedElement) {
  Number x(GaussRational(Rational(3), Rational(-1)), GaussRational(Rational(1, 2), Rational(2)));
  EXPECT_TRUE((x * x.inverse()).is_one());
  EXPECT_THROW((void)Number().inverse(), std::domain_error);
}

TEST(NumberTest, DecimalLiteralsAreExact) {
  EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
}

TEST(ScalarTest, ReducesCommonFactors) {
  // (s^2 - 1) / (s - 1) = s + 1
  Scalar q = (s() * s() - Scalar(1)) / (s() - Scalar(1));
  EXPECT_EQ(q, s() + Scalar(1));
  EXPECT_TRUE(q.denominator().is_one());
}

TEST(ScalarTest, MultivariateGcd) {
  // (kappa s - kappa + s^2 - s) / (kappa^2 - s^2) = (s - 1)(kappa + s) / ((kappa - s)(kappa + s))
  Scalar num = kappa() * s() - kappa() + s() * s() - s();
  Scalar den = kappa() * kappa() - s() * s();
  EXPECT_EQ(num / den, (s() - Scalar(1)) / (kappa() - s()));
}

TEST(ScalarTest, InverseParameterCancels) {
  EXPECT_EQ(s() * s().inverse(), Scalar(1));
  EXPECT_EQ((s() - s().inverse()) * s(), s() * s() - Scalar(1));
}

TEST(ScalarTest, ConjugationFixesParametersAndNegatesI) {
  Scalar x = Scalar::i() * kappa() + Scalar::r2() * s();
  EXPECT_EQ(x.conj(), -Scalar::i() * kappa() + Scalar::r2() * s());
  EXPECT_TRUE(kappa().is_real());
  EXPECT_FALSE(Scalar::i().is_real());
}

TEST(ScalarTest, SubstitutionIsExact) {
  Scalar x = (s() * s() - s().inverse() * s().inverse()) * kappa();
  EXPECT_EQ(x.substitute("s", Scalar(1)), Scalar(0));
  EXPECT_EQ(x.substitute("kappa", Scalar(2)).substitute("s", Scalar(2)), Scalar(Rational(15, 2)));
}

TEST(ScalarTest, MissingAssignmentThrows) {
  EXPECT_THROW((void)kappa().evaluate({}), std::invalid_argument);
  EXPECT_NEAR(std::abs(Scalar::r2().evaluate({}) - std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(ScalarProperty, FieldAxiomsHoldExactly) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = random_rational_function(rng);
    Scalar b = random_rational_function(rng);
    Scalar c = random_rational_function(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, Scalar(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(ScalarProperty, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(11);
  const Assignment at{{"kappa", 1.7}, {"s", 0.6}};
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = random_rational_function(rng);
    Scalar b = random_rational_function(rng);
    auto ea = a.evaluate(at);
    auto eb = b.evaluate(at);
    EXPECT_LT(std::abs((a * b).evaluate(at) - ea * eb), 1e-9 * (1 + std::abs(ea * eb)));
    EXPECT_LT(std::abs((a + b).evaluate(at) - (ea + eb)), 1e-9 * (1 + std::abs(ea) + std::abs(eb)));
  }
}
