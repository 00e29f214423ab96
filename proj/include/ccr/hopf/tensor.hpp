// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ccr/algebra/expr.hpp"
#include "ccr/algebra/presentation.hpp"

namespace ccr::hopf {

/// One word per tensor slot.
using TensorWord = std::vector<Word>;

struct TensorWordOrder {
  bool operator()(const TensorWord& a, const TensorWord& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), WordOrder{});
  }
};

/// Element of a tensor power of the algebra. Order 1 is allowed so that
/// slot-contraction code can treat an Expr as a degenerate tensor.
class TensorExpr {
 public:
  using Terms = std::map<TensorWord, Scalar, TensorWordOrder>;

  explicit TensorExpr(std::size_t order = 2) : order_(order) {}
  /// x_1 ⊗ ... ⊗ x_n, expanded bilinearly.
  static TensorExpr product(const std::vector<Expr>& factors);
  /// 1 ⊗ ... ⊗ 1 scaled by c.
  static TensorExpr unit(std::size_t order, const Scalar& c = Scalar(1));

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Scalar coefficient(const TensorWord& w) const;

  /// Permutes slots: result slot k holds input slot perm[k].
  [[nodiscard]] TensorExpr permute(const std::vector<std::size_t>& perm) const;
  /// The flip tau for order 2.
  [[nodiscard]] TensorExpr flip() const { return permute({1, 0}); }

  /// Rendering with " ⊗ " between slots.
  [[nodiscard]] std::string to_string() const;

  void add_term(const TensorWord& w, const Scalar& c);

  TensorExpr& operator+=(const TensorExpr& o);
  TensorExpr& operator-=(const TensorExpr& o);
  friend TensorExpr operator+(TensorExpr a, const TensorExpr& b) { return a += b; }
  friend TensorExpr operator-(TensorExpr a, const TensorExpr& b) { return a -= b; }
  friend TensorExpr operator*(const Scalar& c, const TensorExpr& t);
  /// Componentwise free product (x1⊗x2)(y1⊗y2) = x1y1 ⊗ x2y2.
  friend TensorExpr operator*(const TensorExpr& a, const TensorExpr& b);
  friend bool operator==(const TensorExpr& a, const TensorExpr& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  void check_order(const TensorExpr& o) const;

  std::size_t order_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const TensorExpr& t) { return os << t.to_string(); }

/// Per-slot normal form, recombined bilinearly.
TensorExpr tensor_normal_form(const TensorExpr& t, const Presentation& p);

/// Replaces slot `slot` by f(word), where f maps a word to a tensor of any
/// order; the result order is order - 1 + f-order. No reduction.
template <class F>
TensorExpr map_slot(const TensorExpr& t, std::size_t slot, std::size_t image_order, F&& f) {
  TensorExpr out(t.order() - 1 + image_order);
  for (const auto& [tw, c] : t.terms()) {
    const TensorExpr image = f(tw[slot]);
    for (const auto& [iw, ic] : image.terms()) {
      TensorWord w(tw.begin(), tw.begin() + static_cast<std::ptrdiff_t>(slot));
      w.insert(w.end(), iw.begin(), iw.end());
      w.insert(w.end(), tw.begin() + static_cast<std::ptrdiff_t>(slot + 1), tw.end());
      out.add_term(w, c * ic);
    }
  }
  return out;
}

/// Multiplication m: order-2 tensor -> algebra, then normal_form.
Expr multiply(const TensorExpr& t, const Presentation& p);

/// Order-1 tensor of an Expr and back.
TensorExpr as_tensor(const Expr& e);
Expr from_tensor(const TensorExpr& t);

}  // namespace ccr::hopf
