// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ccr/algebra/normal_form.hpp"
#include "random_expr.hpp"

using namespace ccr;

namespace {

Expr phi(std::uint32_t j) { return Expr::generator(Generator::phi(j)); }
Expr pi(std::uint32_t j) { return Expr::generator(Generator::pi(j)); }
Expr ap(std::uint32_t j) { return Expr::generator(Generator::a_plus(j)); }
Expr am(std::uint32_t j) { return Expr::generator(Generator::a_minus(j)); }
Expr I() { return Expr::generator(Generator::unit_I()); }
Expr K() { return Expr::generator(Generator::k()); }
Expr Kinv() { return Expr::generator(Generator::k_inv()); }
Scalar kappa() { return Scalar::param("kappa"); }
Scalar s() { return Scalar::param("s"); }

bool only_sorted_words(const Expr& e) {
  for (const auto& [w, c] : e.terms()) {
    if (!is_sorted_word(w)) return false;
  }
  return true;
}

}  // namespace

TEST(NormalFormTest, DeformedCcrReordersPiPhi) {
  auto p = Presentation::deformed_strict();
  Expr expected = phi(0) * pi(0) - (Scalar::i() * kappa()) * I();
  EXPECT_EQ(normal_form(pi(0) * phi(0), p), expected);
}

TEST(NormalFormTest, OrthogonalModesAlreadyNormal) {
  auto p = Presentation::undeformed();
  EXPECT_EQ(normal_form(phi(0) * pi(1), p), phi(0) * pi(1));
  // pi(1) phi(0) swaps without a contraction.
  EXPECT_EQ(normal_form(pi(1) * phi(0), p), phi(0) * pi(1));
}

TEST(NormalFormTest, IdentityIsIdempotent) {
  EXPECT_EQ(normal_form(I() * I(), Presentation::undeformed()), I());
  EXPECT_EQ(normal_form(I() * I(), Presentation::deformed_collapsed()), I());
  // The strict presentation keeps I free.
  EXPECT_EQ(normal_form(I() * I(), Presentation::deformed_strict()), I() * I());
}

TEST(NormalFormTest, LadderContraction) {
  auto p = Presentation::undeformed(Basis::Ladder);
  EXPECT_EQ(normal_form(am(0) * ap(0), p), ap(0) * am(0) + I());
  EXPECT_EQ(normal_form(am(0) * ap(1), p), ap(1) * am(0));
}

TEST(NormalFormTest, CentralElementsMoveLeft) {
  auto p = Presentation::deformed_strict();
  EXPECT_EQ(normal_form(pi(0) * K() * I(), p), I() * K() * pi(0));
  EXPECT_EQ(normal_form(Kinv() * phi(1) * K(), p), phi(1));
  EXPECT_EQ(normal_form(K() * K() * Kinv(), p), K());
}

TEST(NormalFormTest, RejectsGeneratorsOutsideThePresentation) {
  EXPECT_THROW((void)normal_form(K(), Presentation::undeformed()), std::invalid_argument);
}

TEST(NormalFormTest, RejectsNonHermitianGram) {
  auto p = Presentation::undeformed();
  p.gram = Gram({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(1)}});
  EXPECT_THROW((void)normal_form(pi(0) * phi(1), p), std::invalid_argument);
  p.gram = Gram({{Scalar(1), Scalar::i()}, {-Scalar::i(), Scalar(1)}});
  EXPECT_THROW((void)normal_form(pi(0) * phi(1), p), std::invalid_argument);
}

TEST(CommutatorTest, Examples) {
  auto strict = Presentation::deformed_strict();
  EXPECT_EQ(commutator(pi(0), phi(0), strict), (-Scalar::i() * kappa()) * I());
  EXPECT_EQ(commutator(phi(0), phi(1), strict), Expr());
  EXPECT_EQ(commutator(pi(0), phi(0), Presentation::undeformed()), -Scalar::i() * I());
}

TEST(CommutatorTest, GramScalesTheContraction) {
  // One rewrite step: pi(0) phi(0) -> phi(0) pi(0) - i g00 kappa I, g00 = 2.
  auto p = Presentation::deformed_strict();
  p.gram = Gram({{Scalar(2)}});
  EXPECT_EQ(commutator(pi(0), phi(0), p), (Scalar(-2) * Scalar::i() * kappa()) * I());
  // Off-diagonal entries reach across modes.
  p.gram = Gram({{Scalar(1), Scalar(Rational(1, 3))}, {Scalar(Rational(1, 3)), Scalar(1)}});
  EXPECT_EQ(commutator(pi(1), phi(0), p), (Scalar(Rational(-1, 3)) * Scalar::i() * kappa()) * I());
}

TEST(AdjointTest, Examples) {
  EXPECT_EQ(adjoint(ap(0)), am(0));
  EXPECT_EQ(adjoint(Scalar::i() * phi(0)), -Scalar::i() * phi(0));
  EXPECT_EQ(adjoint(phi(0) * pi(1)), pi(1) * phi(0));
}

TEST(BasisConvertTest, Examples) {
  auto p = Presentation::undeformed();
  Scalar inv_r2 = Scalar::r2().inverse();
  EXPECT_EQ(basis_convert(ap(0), Basis::PhiPi, p), inv_r2 * (phi(0) - Scalar::i() * pi(0)));
  EXPECT_EQ(basis_convert(phi(0), Basis::Ladder, p), inv_r2 * (ap(0) + am(0)));
}

TEST(BasisConvertTest, LadderCommutatorFromFieldBasis) {
  auto p = Presentation::deformed_strict();
  Expr a_minus = basis_convert(am(0), Basis::PhiPi, p);
  Expr a_plus = basis_convert(ap(0), Basis::PhiPi, p);
  EXPECT_EQ(commutator(a_minus, a_plus, p), kappa() * I());
}

TEST(DeformationConstantTest, Examples) {
  EXPECT_EQ(deformation_constant(3.0, 1.0), 1.0);
  EXPECT_EQ(deformation_constant(1.0, 5.0), 1.0);
  // (4 - 1/4) / (2 (2 - 1/2)) = 1.25
  EXPECT_NEAR(deformation_constant(2.0, 2.0), 1.25, 1e-15);
  EXPECT_THROW((void)deformation_constant(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW((void)deformation_constant(2.0, -1.0), std::invalid_argument);
}

TEST(DeformationConstantTest, LimitBranchIsContinuous) {
  for (double c : {0.5, 1.0, 2.0, 7.0}) {
    EXPECT_LT(std::abs(deformation_constant(1.0 + 1e-5, c) - 1.0), 1e-8);
    const double below = deformation_constant(1.0 + 0.9e-8, c);
    const double above = deformation_constant(1.0 + 1.1e-8, c);
    EXPECT_NEAR(below, above, 1e-12);
  }
}

TEST(DeformationConstantProperty, UnitCIsExactlyOne) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> q(0.1, 10.0);
  for (int trial = 0; trial < 100; ++trial) EXPECT_EQ(deformation_constant(q(rng), 1.0), 1.0);
}

TEST(ExpandKTest, Examples) {
  auto p = Presentation::deformed_collapsed();
  EXPECT_EQ(expand_k(K() * Kinv(), p), Expr(1));
  Expr expected = (s() * s() - s().pow(-2)) * I();
  EXPECT_EQ(expand_k(K() * K() - Kinv() * Kinv(), p), expected);
  p.s = Scalar(1);
  EXPECT_EQ(expand_k(K(), p), Expr(1));
  EXPECT_THROW((void)expand_k(K(), Presentation::deformed_strict()), std::logic_error);
}

TEST(EvaluateNumericTest, Examples) {
  auto v = evaluate_numeric(kappa() * I(), {{"kappa", deformation_constant(2.0, 2.0)}});
  EXPECT_NEAR(v.terms.at(Word{Generator::unit_I()}).real(), 1.25, 1e-15);
  auto zero = evaluate_numeric((s() - s().inverse()) * phi(0), {{"s", 1.0}});
  EXPECT_TRUE(zero.terms.empty());
  auto plain = evaluate_numeric(Scalar::i() * pi(0), {});
  EXPECT_EQ(plain.terms.at(Word{Generator::pi(0)}), std::complex<double>(0.0, 1.0));
  EXPECT_THROW((void)evaluate_numeric(kappa() * I(), {}), std::invalid_argument);
}

// ---- properties --------------------------------------------------------

class NormalFormProperty : public ::testing::TestWithParam<Variant> {
 protected:
  Presentation presentation() const {
    switch (GetParam()) {
      case Variant::Undeformed: return Presentation::undeformed();
      case Variant::DeformedStrict: return Presentation::deformed_strict();
      case Variant::DeformedCollapsed: return Presentation::deformed_collapsed();
    }
    return {};
  }
  gen::WordShape shape() const {
    gen::WordShape sh;
    sh.ladder = true;
    sh.group_like = GetParam() != Variant::Undeformed;
    return sh;
  }
};

TEST_P(NormalFormProperty, IdempotentAndSorted) {
  std::mt19937_64 rng(101);
  const auto p = presentation();
  for (int trial = 0; trial < 150; ++trial) {
    Expr e = gen::random_expr(rng, shape());
    Expr nf = normal_form(e, p);
    EXPECT_TRUE(only_sorted_words(nf));
    EXPECT_EQ(normal_form(nf, p), nf);
  }
}

TEST_P(NormalFormProperty, CongruentToProduct) {
  std::mt19937_64 rng(202);
  const auto p = presentation();
  for (int trial = 0; trial < 100; ++trial) {
    Expr x = gen::random_expr(rng, shape());
    Expr y = gen::random_expr(rng, shape());
    EXPECT_EQ(normal_form(x * y, p), normal_form(normal_form(x, p) * normal_form(y, p), p));
  }
}

TEST_P(NormalFormProperty, ScheduleIndependent) {
  std::mt19937_64 rng(303);
  const auto p = presentation();
  auto sh = shape();
  sh.modes = 3;
  sh.max_degree = 6;
  for (int trial = 0; trial < 150; ++trial) {
    Expr w = Expr::word(gen::random_word(rng, sh));
    Expr left = normal_form(w, p, {RewriteSchedule::Kind::Leftmost, 0});
    EXPECT_EQ(left, normal_form(w, p, {RewriteSchedule::Kind::Rightmost, 0}));
    EXPECT_EQ(left, normal_form(w, p, {RewriteSchedule::Kind::Random, rng()}));
  }
}

TEST_P(NormalFormProperty, StarCompatible) {
  std::mt19937_64 rng(404);
  const auto p = presentation();
  for (int trial = 0; trial < 100; ++trial) {
    Expr e = gen::random_expr(rng, shape());
    EXPECT_EQ(normal_form(adjoint(e), p), normal_form(adjoint(normal_form(e, p)), p));
    EXPECT_EQ(adjoint(adjoint(e)), e);
  }
}

TEST_P(NormalFormProperty, JacobiIdentity) {
  std::mt19937_64 rng(505);
  const auto p = presentation();
  auto sh = shape();
  sh.max_degree = 2;
  for (int trial = 0; trial < 60; ++trial) {
    Expr x = gen::random_expr(rng, sh, 2);
    Expr y = gen::random_expr(rng, sh, 2);
    Expr z = gen::random_expr(rng, sh, 2);
    Expr sum = commutator(x, commutator(y, z, p), p) + commutator(y, commutator(z, x, p), p) +
               commutator(z, commutator(x, y, p), p);
    EXPECT_TRUE(normal_form(sum, p).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(AllVariants, NormalFormProperty,
                         ::testing::Values(Variant::Undeformed, Variant::DeformedStrict,
                                           Variant::DeformedCollapsed));

TEST(NormalFormConsistency, UnitKappaMatchesUndeformed) {
  std::mt19937_64 rng(606);
  gen::WordShape sh;
  sh.ladder = true;
  const auto deformed = Presentation::deformed_collapsed();
  const auto plain = Presentation::undeformed();
  for (int trial = 0; trial < 100; ++trial) {
    Expr e = gen::random_expr(rng, sh, 3, false);
    EXPECT_EQ(normal_form(e, deformed).substitute("kappa", Scalar(1)), normal_form(e, plain));
  }
}

TEST(BasisConvertProperty, RoundTripIsNormalForm) {
  std::mt19937_64 rng(707);
  gen::WordShape sh;
  sh.ladder = true;
  const auto p = Presentation::deformed_strict();
  for (int trial = 0; trial < 80; ++trial) {
    Expr e = gen::random_expr(rng, sh);
    EXPECT_EQ(basis_convert(basis_convert(e, Basis::Ladder, p), Basis::PhiPi, p), basis_convert(e, Basis::PhiPi, p));
  }
}
