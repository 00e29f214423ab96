// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/hopf/hopf.hpp"

#include <stdexcept>

#include "ccr/algebra/normal_form.hpp"

namespace ccr::hopf {

std::string to_string(Flavor f) { return f == Flavor::Classical ? "classical" : "deformed"; }

Flavor parse_flavor(const std::string& text) {
  if (text == "classical") return Flavor::Classical;
  if (text == "deformed") return Flavor::Deformed;
  throw std::invalid_argument("unknown flavor '" + text + "' (expected classical or deformed)");
}

bool HopfSpec::covers(const Generator& g) const {
  return !g.is_group_like() || flavor_ == Flavor::Deformed;
}

namespace {

void require(const HopfSpec& h, const Generator& g) {
  if (!h.covers(g)) {
    throw std::invalid_argument("generator " + g.to_string() + " is not covered by the " +
                                to_string(h.flavor()) + " Hopf structure");
  }
}

}  // namespace

TensorExpr HopfSpec::coproduct(const Generator& g) const {
  require(*this, g);
  const Expr x = Expr::generator(g);
  const Expr one(1);
  if (g.is_group_like()) return TensorExpr::product({x, x});
  if (flavor_ == Flavor::Classical || g.tag == Tag::I) {
    return TensorExpr::product({x, one}) + TensorExpr::product({one, x});
  }
  const Expr k = Expr::generator(Generator::k());
  const Expr k_inv = Expr::generator(Generator::k_inv());
  return TensorExpr::product({x, k}) + TensorExpr::product({k_inv, x});
}

Scalar HopfSpec::counit(const Generator& g) const {
  require(*this, g);
  return g.is_group_like() ? Scalar(1) : Scalar(0);
}

Expr HopfSpec::antipode(const Generator& g) const {
  require(*this, g);
  if (g.tag == Tag::K) return Expr::generator(Generator::k_inv());
  if (g.tag == Tag::Kinv) return Expr::generator(Generator::k());
  return -Expr::generator(g);
}

TensorExpr coproduct_unreduced(const Expr& e, const HopfSpec& h) {
  TensorExpr out(2);
  for (const auto& [w, c] : e.terms()) {
    TensorExpr term = TensorExpr::unit(2, c);
    for (const auto& g : w) term = term * h.coproduct(g);
    out += term;
  }
  return out;
}

TensorExpr coproduct(const Expr& e, const HopfSpec& h, const Presentation& p) {
  // Reducing letter by letter keeps intermediate sizes small; the result is
  // the same as reducing once at the end.
  TensorExpr out(2);
  for (const auto& [w, c] : e.terms()) {
    TensorExpr term = TensorExpr::unit(2, c);
    for (const auto& g : w) term = tensor_normal_form(term * h.coproduct(g), p);
    out += term;
  }
  return tensor_normal_form(out, p);
}

Scalar counit(const Expr& e, const HopfSpec& h) {
  Scalar out;
  for (const auto& [w, c] : e.terms()) {
    Scalar term = c;
    for (const auto& g : w) term *= h.counit(g);
    out += term;
  }
  return out;
}

Expr antipode(const Expr& e, const HopfSpec& h, const Presentation& p) {
  Expr out;
  for (const auto& [w, c] : e.terms()) {
    Expr term(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * h.antipode(*it);
    out += term;
  }
  return normal_form(out, p);
}

}  // namespace ccr::hopf
