// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/hopf/axioms.hpp"

#include <algorithm>
#include <functional>

#include "ccr/algebra/normal_form.hpp"

namespace ccr::hopf {

std::string Counterexample::residual_string() const {
  return std::visit([](const auto& r) { return r.to_string(); }, residual);
}

namespace {

std::vector<Generator> field_letters(const Presentation& p, std::uint32_t modes) {
  std::vector<Generator> out;
  for (std::uint32_t j = 0; j < modes; ++j) {
    if (p.basis == Basis::PhiPi) {
      out.push_back(Generator::phi(j));
      out.push_back(Generator::pi(j));
    } else {
      out.push_back(Generator::a_plus(j));
      out.push_back(Generator::a_minus(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// K and Kinv are letters of the normal words only when nothing eliminates them.
bool group_like_survives(const HopfSpec& h, const Presentation& p) {
  const Generator k = Generator::k();
  if (!h.covers(k) || !p.allows(k)) return false;
  return normal_form(Expr::generator(k), p) == Expr::generator(k);
}

std::vector<Generator> window_letters(const HopfSpec& h, const Presentation& p, std::uint32_t modes) {
  std::vector<Generator> out{Generator::unit_I()};
  if (group_like_survives(h, p)) {
    out.push_back(Generator::k());
    out.push_back(Generator::k_inv());
  }
  for (const auto& g : field_letters(p, modes)) out.push_back(g);
  return out;
}

void add(AxiomReport& report, const std::string& subject, const std::string& map,
         std::variant<Scalar, Expr, TensorExpr> residual) {
  const bool zero = std::visit([](const auto& r) { return r.is_zero(); }, residual);
  if (!zero) report.counterexamples.push_back({subject, map, std::move(residual)});
}

AxiomReport start(const std::string& axiom, const HopfSpec& h, const Window& w) {
  AxiomReport r;
  r.axiom = axiom;
  r.degree = w.degree;
  if (h.flavor() == Flavor::Deformed) {
    r.notes.emplace_back("counit and antipode on K, Kinv are fixed by group-likeness: eps = 1, S(K) = Kinv");
  }
  return r;
}

AxiomReport over_words(const std::string& axiom, const HopfSpec& h, const Presentation& p,
                       const Window& w,
                       const std::function<void(AxiomReport&, const Word&, const std::string&)>& body) {
  AxiomReport report = start(axiom, h, w);
  for (const auto& word : window_words(h, p, w)) {
    body(report, word, word_to_string(word));
    ++report.checked;
  }
  return report;
}

TensorExpr delta_of_word(const Word& w, const HopfSpec& h) {
  return coproduct_unreduced(Expr::word(w), h);
}

struct Relation {
  Expr lhs;
  Expr rhs;
};

std::vector<Relation> defining_relations(const HopfSpec& h, const Presentation& p, std::uint32_t modes) {
  const Expr one(1);
  const Expr I = Expr::generator(Generator::unit_I());
  const auto fields = field_letters(p, modes);
  std::vector<Relation> out;
  for (std::size_t a = 0; a < fields.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const Generator& x = fields[a];
      const Generator& y = fields[b];
      const Expr gx = Expr::generator(x);
      const Expr gy = Expr::generator(y);
      out.push_back({gx * gy, gy * gx + bracket_coefficient(x, y, p) * I});
    }
  }
  for (const auto& x : fields) {
    const Expr gx = Expr::generator(x);
    out.push_back({gx * I, I * gx});
  }
  if (p.idempotent_I) out.push_back({I * I, I});

  const Generator k = Generator::k();
  if (!h.covers(k) || !p.allows(k)) return out;
  const Expr K = Expr::generator(k);
  const Expr K_inv = Expr::generator(Generator::k_inv());
  if (group_like_survives(h, p)) {
    out.push_back({K * K_inv, one});
    out.push_back({K_inv * K, one});
    for (const auto& x : fields) {
      const Expr gx = Expr::generator(x);
      out.push_back({gx * K, K * gx});
      out.push_back({gx * K_inv, K_inv * gx});
    }
    out.push_back({I * K, K * I});
    out.push_back({I * K_inv, K_inv * I});
  } else if (p.variant == Variant::DeformedCollapsed) {
    out.push_back({K, one + (p.s - Scalar(1)) * I});
    out.push_back({K_inv, one + (p.s.inverse() - Scalar(1)) * I});
  } else {
    out.push_back({K, one});
    out.push_back({K_inv, one});
  }
  return out;
}

}  // namespace

std::vector<Word> window_words(const HopfSpec& h, const Presentation& p, const Window& w) {
  const auto letters = window_letters(h, p, w.modes);
  std::vector<Word> out;
  Word current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (normal_form(Expr::word(current), p) == Expr::word(current)) out.push_back(current);
    if (current.size() == w.degree) return;
    for (std::size_t k = from; k < letters.size(); ++k) {
      current.push_back(letters[k]);
      grow(k);
      current.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), WordOrder{});
  return out;
}

AxiomReport check_respects_relations(const HopfSpec& h, const Presentation& p, const Window& w) {
  AxiomReport report = start("respects_relations", h, w);
  report.degree = 2;
  for (const auto& rel : defining_relations(h, p, w.modes)) {
    const std::string subject = rel.lhs.to_string() + " = " + rel.rhs.to_string();
    add(report, subject, "coproduct",
        tensor_normal_form(coproduct_unreduced(rel.lhs, h) - coproduct_unreduced(rel.rhs, h), p));
    add(report, subject, "counit", counit(rel.lhs, h) - counit(rel.rhs, h));
    add(report, subject, "antipode", antipode(rel.lhs - rel.rhs, h, p));
    ++report.checked;
  }
  const bool idempotent_failure = std::any_of(
      report.counterexamples.begin(), report.counterexamples.end(),
      [](const Counterexample& c) { return c.subject == "I^2 = I"; });
  if (idempotent_failure) {
    report.notes.emplace_back(
        "primitive coproduct and S(I) = -I are incompatible with I*I = I; the idempotent-compatible "
        "coproduct I⊗1 + 1⊗I - I⊗I is not adopted");
  }
  return report;
}

AxiomReport check_coassociativity(const HopfSpec& h, const Presentation& p, const Window& w) {
  return over_words("coassociativity", h, p, w,
                    [&](AxiomReport& r, const Word& word, const std::string& subject) {
                      const TensorExpr d = coproduct(Expr::word(word), h, p);
                      auto delta = [&](const Word& u) { return delta_of_word(u, h); };
                      const TensorExpr left = tensor_normal_form(map_slot(d, 0, 2, delta), p);
                      const TensorExpr right = tensor_normal_form(map_slot(d, 1, 2, delta), p);
                      add(r, subject, "coproduct", left - right);
                    });
}

AxiomReport check_counit(const HopfSpec& h, const Presentation& p, const Window& w) {
  return over_words("counit", h, p, w, [&](AxiomReport& r, const Word& word, const std::string& subject) {
    const TensorExpr d = coproduct(Expr::word(word), h, p);
    auto eps = [&](const Word& u) { return TensorExpr::unit(0, counit(Expr::word(u), h)); };
    const Expr target = normal_form(Expr::word(word), p);
    const Expr left = normal_form(from_tensor(map_slot(d, 0, 0, eps)), p);
    const Expr right = normal_form(from_tensor(map_slot(d, 1, 0, eps)), p);
    add(r, subject, "left", left - target);
    add(r, subject, "right", right - target);
  });
}

AxiomReport check_antipode(const HopfSpec& h, const Presentation& p, const Window& w) {
  return over_words("antipode", h, p, w, [&](AxiomReport& r, const Word& word, const std::string& subject) {
    const TensorExpr d = coproduct(Expr::word(word), h, p);
    auto s = [&](const Word& u) { return as_tensor(antipode(Expr::word(u), h, p)); };
    const Expr target(counit(Expr::word(word), h));
    const Expr left = multiply(tensor_normal_form(map_slot(d, 0, 1, s), p), p);
    const Expr right = multiply(tensor_normal_form(map_slot(d, 1, 1, s), p), p);
    add(r, subject, "left", left - target);
    add(r, subject, "right", right - target);
  });
}

AxiomReport cocommutativity_probe(const HopfSpec& h, const Presentation& p, const Window& w) {
  return over_words("cocommutativity", h, p, w,
                    [&](AxiomReport& r, const Word& word, const std::string& subject) {
                      const TensorExpr d = coproduct(Expr::word(word), h, p);
                      add(r, subject, "coproduct", d - d.flip());
                    });
}

AxiomReport check_multiplicativity(const HopfSpec& h, const Presentation& p, const Window& w) {
  AxiomReport report = start("multiplicativity", h, w);
  const auto words = window_words(h, p, w);
  for (const auto& x : words) {
    if (x.empty()) continue;
    const TensorExpr dx = coproduct(Expr::word(x), h, p);
    for (const auto& y : words) {
      if (y.empty() || x.size() + y.size() > w.degree) continue;
      const Expr xy = Expr::word(x) * Expr::word(y);
      const TensorExpr lhs = coproduct(xy, h, p);
      const TensorExpr rhs = tensor_normal_form(dx * coproduct(Expr::word(y), h, p), p);
      add(report, word_to_string(x) + " * " + word_to_string(y), "coproduct", lhs - rhs);
      ++report.checked;
    }
  }
  return report;
}

std::vector<AxiomReport> check_all(const HopfSpec& h, const Presentation& p, const Window& w) {
  return {check_respects_relations(h, p, w), check_multiplicativity(h, p, w), check_coassociativity(h, p, w),
          check_counit(h, p, w), check_antipode(h, p, w), cocommutativity_probe(h, p, w)};
}

}  // namespace ccr::hopf
