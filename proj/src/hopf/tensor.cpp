// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/hopf/tensor.hpp"

#include <stdexcept>

#include "ccr/algebra/normal_form.hpp"

namespace ccr::hopf {

TensorExpr TensorExpr::product(const std::vector<Expr>& factors) {
  TensorExpr out(factors.size());
  if (factors.empty()) return out;
  std::vector<std::pair<TensorWord, Scalar>> acc{{{}, Scalar(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<TensorWord, Scalar>> next;
    for (const auto& [tw, c] : acc) {
      for (const auto& [w, fc] : f.terms()) {
        TensorWord grown = tw;
        grown.push_back(w);
        next.emplace_back(std::move(grown), c * fc);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [tw, c] : acc) out.add_term(tw, c);
  return out;
}

TensorExpr TensorExpr::unit(std::size_t order, const Scalar& c) {
  TensorExpr out(order);
  out.add_term(TensorWord(order), c);
  return out;
}

Scalar TensorExpr::coefficient(const TensorWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

TensorExpr TensorExpr::permute(const std::vector<std::size_t>& perm) const {
  if (perm.size() != order_) throw std::invalid_argument("permutation size does not match tensor order");
  TensorExpr out(order_);
  for (const auto& [tw, c] : terms_) {
    TensorWord w(order_);
    for (std::size_t k = 0; k < order_; ++k) w[k] = tw[perm[k]];
    out.add_term(w, c);
  }
  return out;
}

std::string TensorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [tw, c] : terms_) {
    std::string slots;
    for (std::size_t k = 0; k < tw.size(); ++k) {
      if (k > 0) slots += " ⊗ ";
      slots += word_to_string(tw[k]);
    }
    bool negative = false;
    std::string term;
    if (c.is_one()) {
      term = slots;
    } else if ((-c).is_one()) {
      term = slots;
      negative = true;
    } else {
      std::string coef = c.is_atomic() ? c.to_string() : "(" + c.to_string() + ")";
      if (coef.size() > 1 && coef[0] == '-') {
        negative = true;
        coef.erase(0, 1);
      }
      term = coef + "*(" + slots + ")";
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

void TensorExpr::add_term(const TensorWord& w, const Scalar& c) {
  if (w.size() != order_) throw std::invalid_argument("tensor word has the wrong number of slots");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorExpr::check_order(const TensorExpr& o) const {
  if (o.order_ != order_) throw std::invalid_argument("tensor orders differ");
}

TensorExpr& TensorExpr::operator+=(const TensorExpr& o) {
  check_order(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TensorExpr& TensorExpr::operator-=(const TensorExpr& o) {
  check_order(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

TensorExpr operator*(const Scalar& c, const TensorExpr& t) {
  TensorExpr out(t.order_);
  if (c.is_zero()) return out;
  for (const auto& [w, tc] : t.terms_) out.add_term(w, c * tc);
  return out;
}

TensorExpr operator*(const TensorExpr& a, const TensorExpr& b) {
  a.check_order(b);
  TensorExpr out(a.order_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      TensorWord w(a.order_);
      for (std::size_t k = 0; k < a.order_; ++k) {
        w[k] = wa[k];
        w[k].insert(w[k].end(), wb[k].begin(), wb[k].end());
      }
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

TensorExpr tensor_normal_form(const TensorExpr& t, const Presentation& p) {
  std::map<Word, Expr, WordOrder> cache;
  auto reduce = [&](const Word& w) -> const Expr& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, normal_form(Expr::word(w), p)).first;
    return it->second;
  };
  TensorExpr out(t.order());
  for (const auto& [tw, c] : t.terms()) {
    std::vector<Expr> slots;
    slots.reserve(tw.size());
    for (const auto& w : tw) slots.push_back(reduce(w));
    out += c * TensorExpr::product(slots);
  }
  return out;
}

Expr multiply(const TensorExpr& t, const Presentation& p) {
  if (t.order() != 2) throw std::invalid_argument("multiplication needs an order-2 tensor");
  Expr out;
  for (const auto& [tw, c] : t.terms()) {
    Word w = tw[0];
    w.insert(w.end(), tw[1].begin(), tw[1].end());
    out.add_term(w, c);
  }
  return normal_form(out, p);
}

TensorExpr as_tensor(const Expr& e) {
  TensorExpr out(1);
  for (const auto& [w, c] : e.terms()) out.add_term({w}, c);
  return out;
}

Expr from_tensor(const TensorExpr& t) {
  if (t.order() != 1) throw std::invalid_argument("expected an order-1 tensor");
  Expr out;
  for (const auto& [tw, c] : t.terms()) out.add_term(tw[0], c);
  return out;
}

}  // namespace ccr::hopf
