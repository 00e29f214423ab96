// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/algebra/presentation.hpp"

#include <cmath>
#include <stdexcept>

#include "ccr/algebra/normal_form.hpp"

namespace ccr {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Undeformed: return "undeformed";
    case Variant::DeformedStrict: return "deformed-strict";
    case Variant::DeformedCollapsed: return "deformed-collapsed";
  }
  return "?";
}

std::string to_string(Basis b) { return b == Basis::PhiPi ? "phi-pi" : "ladder"; }

Variant parse_variant(const std::string& text) {
  if (text == "undeformed") return Variant::Undeformed;
  if (text == "deformed" || text == "deformed-strict" || text == "strict") return Variant::DeformedStrict;
  if (text == "deformed-collapsed" || text == "collapsed") return Variant::DeformedCollapsed;
  throw std::invalid_argument("unknown variant '" + text + "'");
}

Basis parse_basis(const std::string& text) {
  if (text == "phi-pi" || text == "phipi") return Basis::PhiPi;
  if (text == "ladder") return Basis::Ladder;
  throw std::invalid_argument("unknown basis '" + text + "'");
}

Gram::Gram(std::vector<std::vector<Scalar>> block) : block_(std::move(block)) {}

Scalar Gram::operator()(std::uint32_t j, std::uint32_t k) const {
  if (j < block_.size() && k < block_.size()) return block_[j][k];
  return j == k ? Scalar(1) : Scalar(0);
}

bool Gram::is_identity() const {
  for (std::size_t j = 0; j < block_.size(); ++j) {
    for (std::size_t k = 0; k < block_.size(); ++k) {
      if (!(block_[j][k] == Scalar(j == k ? 1 : 0))) return false;
    }
  }
  return true;
}

void Gram::validate() const {
  for (std::size_t j = 0; j < block_.size(); ++j) {
    if (block_[j].size() != block_.size()) throw std::invalid_argument("gram block is not square");
  }
  for (std::size_t j = 0; j < block_.size(); ++j) {
    for (std::size_t k = 0; k < block_.size(); ++k) {
      if (!(block_[j][k].conj() == block_[k][j])) {
        throw std::invalid_argument("gram is not Hermitian at (" + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
      }
      if (!block_[j][k].is_real()) {
        throw std::invalid_argument("gram entry (" + std::to_string(j) + "," + std::to_string(k) +
                                    ") is not real; the field relations need a real form");
      }
    }
  }
}

Presentation Presentation::undeformed(Basis basis) {
  Presentation p;
  p.variant = Variant::Undeformed;
  p.basis = basis;
  p.kappa = Scalar(1);
  p.s = Scalar(1);
  return p;
}

Presentation Presentation::deformed_strict(Basis basis) {
  Presentation p;
  p.variant = Variant::DeformedStrict;
  p.basis = basis;
  p.idempotent_I = false;
  return p;
}

Presentation Presentation::deformed_collapsed(Basis basis) {
  Presentation p;
  p.variant = Variant::DeformedCollapsed;
  p.basis = basis;
  return p;
}

Scalar Presentation::effective_kappa() const {
  return variant == Variant::Undeformed ? Scalar(1) : kappa;
}

bool Presentation::allows(const Generator& g) const {
  return !g.is_group_like() || variant != Variant::Undeformed;
}

Assignment Presentation::numeric_assignment() const {
  Assignment out;
  if (!numeric) return out;
  out["kappa"] = deformation_constant(numeric->q, numeric->c);
  out["s"] = std::pow(numeric->q, numeric->c / 2.0);
  return out;
}

}  // namespace ccr
