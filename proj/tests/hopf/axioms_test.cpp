// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/hopf/axioms.hpp"

#include <gtest/gtest.h>

#include "ccr/algebra/normal_form.hpp"

using namespace ccr;
using namespace ccr::hopf;

namespace {

Expr phi(std::uint32_t j) { return Expr::generator(Generator::phi(j)); }
Expr I() { return Expr::generator(Generator::unit_I()); }
Expr K() { return Expr::generator(Generator::k()); }
Expr Kinv() { return Expr::generator(Generator::k_inv()); }
Expr one() { return Expr(1); }

TensorExpr tensor(const Expr& a, const Expr& b) { return TensorExpr::product({a, b}); }

std::string describe(const AxiomReport& r) {
  std::string out = r.axiom + ":";
  for (const auto& c : r.counterexamples) out += "\n  " + c.subject + " [" + c.map + "] " + c.residual_string();
  return out;
}

const Counterexample* find(const AxiomReport& r, const std::string& subject, const std::string& map) {
  for (const auto& c : r.counterexamples) {
    if (c.subject == subject && c.map == map) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(WindowTest, StrictDeformedWindowHasNoCancellingPairs) {
  const auto words = window_words(HopfSpec::deformed(), Presentation::deformed_strict(), {2, 2});
  // Letters I, K, Kinv, phi0, phi1, pi0, pi1: 1 + 7 + 28 words, minus K*Kinv.
  EXPECT_EQ(words.size(), 35u);
  for (const auto& w : words) EXPECT_TRUE(is_sorted_word(w));
}

TEST(WindowTest, CollapsedWindowDropsIdempotentSquares) {
  const auto words = window_words(HopfSpec::classical(), Presentation::deformed_collapsed(), {1, 2});
  // Letters I, phi0, pi0: 1 + 3 + 6 words, minus I*I.
  EXPECT_EQ(words.size(), 9u);
}

TEST(RespectsRelationsTest, ClassicalOverStrictPasses) {
  auto r = check_respects_relations(HopfSpec::classical(), Presentation::deformed_strict());
  EXPECT_TRUE(r.pass()) << describe(r);
  EXPECT_GT(r.checked, 0u);
}

TEST(RespectsRelationsTest, ClassicalOverCollapsedFailsOnIdempotent) {
  auto r = check_respects_relations(HopfSpec::classical(), Presentation::deformed_collapsed());
  ASSERT_FALSE(r.pass());
  const auto* delta = find(r, "I^2 = I", "coproduct");
  ASSERT_NE(delta, nullptr) << describe(r);
  EXPECT_EQ(std::get<TensorExpr>(delta->residual), Scalar(2) * tensor(I(), I()));
  const auto* s = find(r, "I^2 = I", "antipode");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(std::get<Expr>(s->residual), Scalar(2) * I());
  EXPECT_EQ(find(r, "I^2 = I", "counit"), nullptr);
  // Nothing else fails.
  EXPECT_EQ(r.counterexamples.size(), 2u) << describe(r);
  EXPECT_FALSE(r.notes.empty());
}

TEST(RespectsRelationsTest, DeformedOverStrictExposesCentralChargeMismatch) {
  // [Delta pi, Delta phi] = -i kappa (I⊗K^2 + Kinv^2⊗I), while Delta(-i kappa I) is primitive.
  auto r = check_respects_relations(HopfSpec::deformed(), Presentation::deformed_strict(), {1, 2});
  const auto* c = find(r, "pi(0)*phi(0) = -i*kappa*I + phi(0)*pi(0)", "coproduct");
  ASSERT_NE(c, nullptr) << describe(r);
  const Scalar ik = Scalar::i() * Scalar::param("kappa");
  TensorExpr expected = ik * (tensor(I(), one()) + tensor(one(), I()) - tensor(I(), K() * K()) -
                              tensor(Kinv() * Kinv(), I()));
  EXPECT_EQ(std::get<TensorExpr>(c->residual), tensor_normal_form(expected, Presentation::deformed_strict()));
}

TEST(AxiomTest, ClassicalOverStrictPassesEverythingAtDegreeThree) {
  const auto h = HopfSpec::classical();
  const auto p = Presentation::deformed_strict();
  const Window w{2, 3};
  for (const auto& r : {check_coassociativity(h, p, w), check_counit(h, p, w), check_antipode(h, p, w),
                        cocommutativity_probe(h, p, w), check_multiplicativity(h, p, w)}) {
    EXPECT_TRUE(r.pass()) << describe(r);
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(AxiomTest, ClassicalOverUndeformedFailsOnlyOnIdempotent) {
  for (const auto& r : check_all(HopfSpec::classical(), Presentation::undeformed(), {2, 2})) {
    if (r.axiom == "respects_relations") {
      EXPECT_EQ(r.counterexamples.size(), 2u) << describe(r);
      for (const auto& c : r.counterexamples) EXPECT_EQ(c.subject, "I^2 = I");
    } else {
      EXPECT_TRUE(r.pass()) << describe(r);
    }
  }
}

TEST(AxiomTest, DeformedStrictPassesBialgebraAxiomsAtDegreeTwo) {
  const auto h = HopfSpec::deformed();
  const auto p = Presentation::deformed_strict();
  const Window w{2, 2};
  for (const auto& r : {check_multiplicativity(h, p, w), check_coassociativity(h, p, w), check_counit(h, p, w),
                        check_antipode(h, p, w)}) {
    EXPECT_TRUE(r.pass()) << describe(r);
    EXPECT_FALSE(r.notes.empty());
  }
}

TEST(AxiomTest, DeformedIsNotCocommutative) {
  auto r = cocommutativity_probe(HopfSpec::deformed(), Presentation::deformed_strict(), {1, 1});
  ASSERT_FALSE(r.pass());
  const auto* c = find(r, "phi(0)", "coproduct");
  ASSERT_NE(c, nullptr);
  TensorExpr witness = tensor(phi(0), K() - Kinv()) + tensor(Kinv() - K(), phi(0));
  EXPECT_EQ(std::get<TensorExpr>(c->residual), witness);
}

TEST(AxiomTest, DeformedAtTrivialDeformationIsCocommutative) {
  auto p = Presentation::deformed_strict();
  p.s = Scalar(1);
  auto r = cocommutativity_probe(HopfSpec::deformed(), p, {2, 2});
  EXPECT_TRUE(r.pass()) << describe(r);
}

TEST(AxiomTest, CollapsedCoassociativityReportsExplicitResiduals) {
  const auto p = Presentation::deformed_collapsed();
  auto r = check_coassociativity(HopfSpec::deformed(), p, {1, 1});
  for (const auto& c : r.counterexamples) {
    const auto& t = std::get<TensorExpr>(c.residual);
    EXPECT_FALSE(t.is_zero());
    EXPECT_EQ(tensor_normal_form(t, p), t);
  }
  // Delta(K) = K⊗K against Delta(1 + (s - 1) I) leaves (s - 1)^2 I⊗I.
  auto rel = check_respects_relations(HopfSpec::deformed(), p, {1, 1});
  const auto* c = find(rel, "K = 1 + (s - 1)*I", "coproduct");
  ASSERT_NE(c, nullptr) << describe(rel);
  const Scalar sm1 = Scalar::param("s") - Scalar(1);
  EXPECT_EQ(std::get<TensorExpr>(c->residual), sm1 * sm1 * tensor(I(), I()));
}

TEST(AxiomTest, ResidualsAreNormalForms) {
  const auto p = Presentation::deformed_strict();
  for (const auto& r : check_all(HopfSpec::deformed(), p, {1, 2})) {
    for (const auto& c : r.counterexamples) {
      if (const auto* t = std::get_if<TensorExpr>(&c.residual)) {
        EXPECT_EQ(tensor_normal_form(*t, p), *t);
      } else if (const auto* e = std::get_if<Expr>(&c.residual)) {
        EXPECT_EQ(normal_form(*e, p), *e);
      }
    }
  }
}
