// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/algebra/normal_form.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ccr {

namespace {

// [x, y] / (gram * kappa) for x > y, both field letters. Derived from
// [pi(j), phi(k)] = -i g_jk kappa I and a+- = (phi -+ i pi) / sqrt 2.
Number family_bracket(Tag x, Tag y) {
  const Number half_r2 = Number::sqrt2() * Number(Rational(1, 2));
  const Number i = Number::i();
  if (x == Tag::Pi && y == Tag::Phi) return -i;
  if (x == Tag::APlus && y == Tag::Phi) return -half_r2;
  if (x == Tag::APlus && y == Tag::Pi) return i * half_r2;
  if (x == Tag::AMinus && y == Tag::Phi) return half_r2;
  if (x == Tag::AMinus && y == Tag::Pi) return i * half_r2;
  if (x == Tag::AMinus && y == Tag::APlus) return Number(1);
  return Number(0);
}

Word splice(const Word& w, std::size_t at, std::size_t erase, const Word& insert) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at + erase), w.end());
  return out;
}

void validate(const Expr& e, const Presentation& p) {
  p.gram.validate();
  for (const auto& g : e.generators()) {
    if (!p.allows(g)) {
      throw std::invalid_argument("generator " + g.to_string() + " is not part of the " +
                                  to_string(p.variant) + " presentation");
    }
  }
}

// Letter-level eliminations applied before pair rewriting.
Expr eliminate_group_like(const Expr& e, const Presentation& p) {
  const bool collapse = p.variant == Variant::DeformedCollapsed;
  const bool trivial = p.variant == Variant::DeformedStrict && p.s.is_one();
  if (!collapse && !trivial) return e;
  bool any = false;
  for (const auto& g : e.generators()) any = any || g.is_group_like();
  if (!any) return e;

  const Expr unit(1);
  const Expr I = Expr::generator(Generator::unit_I());
  const Expr k_image = trivial ? unit : unit + (p.s - Scalar(1)) * I;
  const Expr k_inv_image = trivial ? unit : unit + (p.s.inverse() - Scalar(1)) * I;

  Expr out;
  for (const auto& [w, c] : e.terms()) {
    Expr term(c);
    for (const auto& g : w) {
      if (g.tag == Tag::K) {
        term = term * k_image;
      } else if (g.tag == Tag::Kinv) {
        term = term * k_inv_image;
      } else {
        term = term * Expr::generator(g);
      }
    }
    out += term;
  }
  return out;
}

class Rewriter {
 public:
  Rewriter(const Presentation& p, RewriteSchedule schedule)
      : p_(p), schedule_(schedule), rng_(schedule.seed) {}

  Expr run(const Expr& input) {
    Expr::Terms pending = input.terms();
    Expr result;
    // Every rewrite produces words strictly smaller in the graded order, so
    // taking the largest pending word visits each word once.
    while (!pending.empty()) {
      auto node = pending.extract(std::prev(pending.end()));
      const Word& w = node.key();
      const Scalar& c = node.mapped();
      auto at = pick(w);
      if (!at) {
        result.add_term(w, c);
      } else {
        rewrite(w, c, *at, pending);
      }
    }
    return result;
  }

 private:
  bool reducible(const Word& w, std::size_t i) const {
    const Generator& x = w[i];
    const Generator& y = w[i + 1];
    if (y < x) return true;
    if (x.tag == Tag::I && y.tag == Tag::I) return p_.idempotent_I;
    return x.tag == Tag::K && y.tag == Tag::Kinv;
  }

  std::optional<std::size_t> pick(const Word& w) {
    if (w.size() < 2) return std::nullopt;
    switch (schedule_.kind) {
      case RewriteSchedule::Kind::Leftmost:
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (reducible(w, i)) return i;
        }
        return std::nullopt;
      case RewriteSchedule::Kind::Rightmost:
        for (std::size_t i = w.size() - 1; i-- > 0;) {
          if (reducible(w, i)) return i;
        }
        return std::nullopt;
      case RewriteSchedule::Kind::Random: {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (reducible(w, i)) sites.push_back(i);
        }
        if (sites.empty()) return std::nullopt;
        return sites[rng_() % sites.size()];
      }
    }
    return std::nullopt;
  }

  static void accumulate(Expr::Terms& pending, Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  }

  void rewrite(const Word& w, const Scalar& c, std::size_t i, Expr::Terms& pending) const {
    const Generator x = w[i];
    const Generator y = w[i + 1];
    if (y < x) {
      accumulate(pending, splice(w, i, 2, {y, x}), c);
      if (x.is_field() && y.is_field()) {
        Scalar b = bracket_coefficient(x, y, p_);
        if (!b.is_zero()) accumulate(pending, splice(w, i, 2, {Generator::unit_I()}), c * b);
      }
    } else if (x.tag == Tag::I) {
      accumulate(pending, splice(w, i, 2, {Generator::unit_I()}), c);
    } else {
      accumulate(pending, splice(w, i, 2, {}), c);
    }
  }

  const Presentation& p_;
  RewriteSchedule schedule_;
  std::mt19937_64 rng_;
};

}  // namespace

Scalar bracket_coefficient(const Generator& x, const Generator& y, const Presentation& p) {
  if (!x.is_field() || !y.is_field()) return {};
  Number base = family_bracket(x.tag, y.tag);
  if (base.is_zero()) return {};
  return Scalar(base) * p.gram(x.mode, y.mode) * p.effective_kappa();
}

Expr normal_form(const Expr& e, const Presentation& p, RewriteSchedule schedule) {
  validate(e, p);
  return Rewriter(p, schedule).run(eliminate_group_like(e, p));
}

Expr commutator(const Expr& x, const Expr& y, const Presentation& p) {
  return normal_form(x * y - y * x, p);
}

Expr adjoint(const Expr& e) {
  Expr out;
  for (const auto& [w, c] : e.terms()) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r) {
      if (g.tag == Tag::APlus) {
        g.tag = Tag::AMinus;
      } else if (g.tag == Tag::AMinus) {
        g.tag = Tag::APlus;
      }
    }
    out.add_term(r, c.conj());
  }
  return out;
}

Expr basis_convert(const Expr& e, Basis target, const Presentation& p) {
  const Scalar half_r2 = Scalar::r2() * Scalar(Rational(1, 2));
  const Scalar i = Scalar::i();
  Expr out;
  for (const auto& [w, c] : e.terms()) {
    Expr term(c);
    for (const auto& g : w) {
      const Expr phi = Expr::generator(Generator::phi(g.mode));
      const Expr pi = Expr::generator(Generator::pi(g.mode));
      const Expr ap = Expr::generator(Generator::a_plus(g.mode));
      const Expr am = Expr::generator(Generator::a_minus(g.mode));
      Expr image = Expr::generator(g);
      if (target == Basis::Ladder && g.tag == Tag::Phi) {
        image = half_r2 * (ap + am);
      } else if (target == Basis::Ladder && g.tag == Tag::Pi) {
        image = (i * half_r2) * (ap - am);
      } else if (target == Basis::PhiPi && g.tag == Tag::APlus) {
        image = half_r2 * (phi - i * pi);
      } else if (target == Basis::PhiPi && g.tag == Tag::AMinus) {
        image = half_r2 * (phi + i * pi);
      }
      term = term * image;
    }
    out += term;
  }
  return normal_form(out, p);
}

Expr expand_k(const Expr& e, const Presentation& p) {
  if (p.variant != Variant::DeformedCollapsed) {
    throw std::logic_error("expand_k requires the deformed-collapsed presentation, got " +
                           to_string(p.variant));
  }
  return normal_form(e, p);
}

double deformation_constant(double q, double c, double threshold) {
  if (!(q > 0.0) || !(c > 0.0)) {
    throw std::invalid_argument("deformation_constant needs q > 0 and c > 0");
  }
  const double h = std::log(q);
  if (std::abs(q - 1.0) < threshold) {
    const double c2 = c * c;
    const double h2 = h * h;
    return 1.0 + (c2 - 1.0) * h2 / 6.0 + (c2 - 1.0) * (3.0 * c2 - 7.0) * h2 * h2 / 360.0;
  }
  // (q^c - q^-c) / (c (q - q^-1)) written with h = ln q.
  return std::sinh(c * h) / (c * std::sinh(h));
}

}  // namespace ccr
