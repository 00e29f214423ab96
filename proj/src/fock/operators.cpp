// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/fock/operators.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "ccr/algebra/normal_form.hpp"

namespace ccr::fock {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseOperator from_triplets(std::size_t dim, const std::vector<Triplet>& t) {
  SparseOperator out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SparseOperator combine(const ModeSpace& m, const std::vector<SparseOperator>& ops, const ModeVector& v) {
  const ModeVector coords = m.orthonormal_coordinates(v);
  SparseOperator out(static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const double c = coords(static_cast<Eigen::Index>(k));
    if (c != 0.0) out += Complex(c) * ops[k];
  }
  return out;
}

}  // namespace

Ladder ladder_matrices(const ModeSpace& m) {
  const FockIndex& idx = m.index();
  Ladder out;
  for (std::size_t k = 0; k < m.modes(); ++k) {
    std::vector<Triplet> lower;
    for (std::size_t col = 0; col < idx.size(); ++col) {
      FockIndex::Occupation n = idx.state(col);
      if (n[k] == 0) continue;
      const double amp = std::sqrt(static_cast<double>(n[k]));
      --n[k];
      const auto row = idx.find(n);
      lower.emplace_back(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col), amp);
    }
    SparseOperator a = from_triplets(idx.size(), lower);
    out.raise.emplace_back(a.adjoint());
    out.lower.push_back(std::move(a));
  }
  return out;
}

SparseOperator creation(const ModeSpace& m, const Ladder& l, const ModeVector& v) { return combine(m, l.raise, v); }

SparseOperator annihilation(const ModeSpace& m, const Ladder& l, const ModeVector& v) {
  return combine(m, l.lower, v);
}

FieldPair phi_pi_matrices(const ModeSpace& m, const Ladder& l, const ModeVector& v) {
  const SparseOperator up = creation(m, l, v);
  const SparseOperator down = annihilation(m, l, v);
  const Complex scale(1.0 / std::sqrt(2.0));
  const Complex i_scale(0.0, 1.0 / std::sqrt(2.0));
  return {scale * (up + down), i_scale * (up - down)};
}

BogoliubovSpec BogoliubovSpec::uniform(std::size_t d, double r) { return {std::vector<double>(d, r)}; }

BogoliubovSpec BogoliubovSpec::summable(std::size_t d, double r) {
  BogoliubovSpec out;
  for (std::size_t j = 0; j < d; ++j) out.r.push_back(std::ldexp(r, -static_cast<int>(j)));
  return out;
}

double BogoliubovSpec::r_from_c(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("generating parameter c must be positive");
  return -0.5 * std::log(2.0 * c * c);
}

double BogoliubovSpec::gamma_from_r(double r) { return std::exp(-2.0 * r); }

BogoliubovSpec BogoliubovSpec::from_generating_parameter(std::size_t d, double c) {
  return uniform(d, r_from_c(c));
}

std::vector<double> BogoliubovSpec::gamma() const {
  std::vector<double> out;
  for (double x : r) out.push_back(gamma_from_r(x));
  return out;
}

Ladder bogoliubov_ladder(const ModeSpace& m, const Ladder& l, const BogoliubovSpec& spec) {
  if (spec.r.size() != m.modes()) throw std::invalid_argument("squeezing list length must equal the mode count");
  Ladder out;
  for (std::size_t k = 0; k < m.modes(); ++k) {
    const Complex ch(std::cosh(spec.r[k]));
    const Complex sh(std::sinh(spec.r[k]));
    SparseOperator lower = ch * l.lower[k] + sh * l.raise[k];
    out.raise.emplace_back(lower.adjoint());
    out.lower.push_back(std::move(lower));
  }
  return out;
}

SparseOperator number_operator(const Ladder& l) {
  if (l.raise.empty()) throw std::invalid_argument("empty ladder");
  SparseOperator n = l.raise[0] * l.lower[0];
  for (std::size_t k = 1; k < l.raise.size(); ++k) n += l.raise[k] * l.lower[k];
  n.prune(Complex(0.0));
  return n;
}

TransferRep transfer_rep(double q, double c) { return {q, c, deformation_constant(q, c)}; }

FieldPair transfer_fields(const ModeSpace& m, const Ladder& l, const TransferRep& rep, const ModeVector& v) {
  FieldPair f = phi_pi_matrices(m, l, v);
  f.pi = Complex(rep.pi_scale) * f.pi;
  return f;
}

SparseOperator represent(const Expr& e, const ModeSpace& m, const Ladder& l, const Assignment& values,
                         const Representation& rep) {
  const SparseOperator id = m.identity();
  std::map<Generator, SparseOperator> images;
  auto image = [&](const Generator& g) -> const SparseOperator& {
    auto it = images.find(g);
    if (it != images.end()) return it->second;
    SparseOperator op;
    if (g.tag == Tag::I) {
      op = id;
    } else if (g.tag == Tag::K) {
      op = Complex(rep.k_value) * id;
    } else if (g.tag == Tag::Kinv) {
      op = Complex(1.0 / rep.k_value) * id;
    } else {
      if (g.mode >= m.modes()) {
        throw std::invalid_argument("mode " + std::to_string(g.mode) + " is outside the " +
                                    std::to_string(m.modes()) + "-mode space");
      }
      const FieldPair f = phi_pi_matrices(m, l, m.basis_vector(g.mode));
      const SparseOperator pi = Complex(rep.pi_scale) * f.pi;
      const Complex inv_r2(1.0 / std::sqrt(2.0));
      const Complex i(0.0, 1.0);
      switch (g.tag) {
        case Tag::Phi: op = f.phi; break;
        case Tag::Pi: op = pi; break;
        case Tag::APlus: op = inv_r2 * (f.phi - i * pi); break;
        case Tag::AMinus: op = inv_r2 * (f.phi + i * pi); break;
        default: break;
      }
    }
    return images.emplace(g, std::move(op)).first->second;
  };

  SparseOperator out(static_cast<Eigen::Index>(m.dim()), static_cast<Eigen::Index>(m.dim()));
  for (const auto& [w, c] : e.terms()) {
    const Complex coef = c.evaluate(values);
    if (coef == 0.0) continue;
    SparseOperator term = coef * id;
    for (const auto& g : w) {
      SparseOperator next = term * image(g);
      term = std::move(next);
    }
    out += term;
  }
  out.prune(Complex(0.0));
  return out;
}

}  // namespace ccr::fock
