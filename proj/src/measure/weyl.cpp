// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/measure/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace ccr::measure {

namespace {

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Weyl elements of different dimension");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::string vector_to_string(const RationalVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + rational_to_string(v[i]);
  return out + "]";
}

}  // namespace

WeylElement WeylElement::identity(std::size_t d) { return {RationalVector(d), RationalVector(d), Rational(0)}; }

WeylElement WeylElement::t(RationalVector v) {
  const std::size_t d = v.size();
  return {std::move(v), RationalVector(d), Rational(0)};
}

WeylElement WeylElement::p(RationalVector v) {
  const std::size_t d = v.size();
  return {RationalVector(d), std::move(v), Rational(0)};
}

std::complex<double> WeylElement::lambda() const { return std::polar(1.0, phase.get_d()); }

std::string WeylElement::to_string() const {
  return "(" + vector_to_string(v1) + ", " + vector_to_string(v2) + ", exp(i*" + rational_to_string(phase) + "))";
}

Rational rational_form(const RationalVector& v, const RationalVector& w, const RationalMatrix& gram) {
  if (v.size() != w.size()) throw std::invalid_argument("vectors of different dimension");
  Rational out(0);
  if (gram.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) out += v[i] * w[i];
    return out;
  }
  if (gram.size() != v.size()) throw std::invalid_argument("gram does not match the vector dimension");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (gram[i].size() != v.size()) throw std::invalid_argument("gram is not square");
    for (std::size_t j = 0; j < v.size(); ++j) out += v[i] * gram[i][j] * w[j];
  }
  return out;
}

WeylElement weyl_compose(const WeylElement& g, const WeylElement& h, const RationalMatrix& gram) {
  WeylElement out{add(g.v1, h.v1), add(g.v2, h.v2), g.phase + h.phase + rational_form(g.v2, h.v1, gram)};
  out.phase.canonicalize();
  return out;
}

}  // namespace ccr::measure
