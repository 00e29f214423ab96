// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/algebra/expr.hpp"

#include <algorithm>
#include <cmath>

namespace ccr {

std::string Generator::to_string() const {
  const std::string j = "(" + std::to_string(mode) + ")";
  switch (tag) {
    case Tag::I: return "I";
    case Tag::K: return "K";
    case Tag::Kinv: return "Kinv";
    case Tag::Phi: return "phi" + j;
    case Tag::Pi: return "pi" + j;
    case Tag::APlus: return "ap" + j;
    case Tag::AMinus: return "am" + j;
  }
  return "?";
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "one";
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += "*";
    out += w[k].to_string();
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

Expr::Expr(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

Expr Expr::generator(Generator g) { return word({g}); }

Expr Expr::word(Word w, Scalar c) {
  Expr e;
  e.add_term(w, c);
  return e;
}

std::size_t Expr::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

Scalar Expr::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

bool Expr::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::set<std::string> Expr::params() const {
  std::set<std::string> out;
  for (const auto& [w, c] : terms_) {
    auto p = c.params();
    out.insert(p.begin(), p.end());
  }
  return out;
}

std::set<Generator> Expr::generators() const {
  std::set<Generator> out;
  for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
  return out;
}

Expr Expr::substitute(const std::string& name, const Scalar& value) const {
  Expr out;
  for (const auto& [w, c] : terms_) out.add_term(w, c.substitute(name, value));
  return out;
}

void Expr::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Expr operator-(const Expr& a) {
  Expr out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

Expr operator*(const Scalar& c, const Expr& e) {
  Expr out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : e.terms_) out.add_term(w, c * x);
  return out;
}

std::string Expr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string term;
    bool negative = false;
    if (w.empty()) {
      term = c.is_atomic() ? c.to_string() : "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      term = word_to_string(w);
    } else if ((-c).is_one()) {
      term = word_to_string(w);
      negative = true;
    } else {
      std::string coef = c.is_atomic() ? c.to_string() : "(" + c.to_string() + ")";
      term = coef + "*" + word_to_string(w);
    }
    if (!negative && term.size() > 1 && term[0] == '-') {
      negative = true;
      term.erase(0, 1);
    }
    if (first) {
      out += negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
    first = false;
  }
  return out;
}

double NumericExpr::max_abs_difference(const NumericExpr& other) const {
  double worst = 0.0;
  for (const auto& [w, c] : terms) {
    auto it = other.terms.find(w);
    worst = std::max(worst, std::abs(c - (it == other.terms.end() ? 0.0 : it->second)));
  }
  for (const auto& [w, c] : other.terms) {
    if (!terms.contains(w)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

NumericExpr evaluate_numeric(const Expr& e, const Assignment& values) {
  NumericExpr out;
  for (const auto& [w, c] : e.terms()) {
    std::complex<double> v = c.evaluate(values);
    if (v != 0.0) out.terms.emplace(w, v);
  }
  return out;
}

}  // namespace ccr
