// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/measure/functional.hpp"

#include <cmath>
#include <stdexcept>

namespace ccr::measure {

namespace {

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Polynomial Polynomial::constant(std::size_t d, Complex c) {
  Polynomial p(d);
  p.add_term(Exponents(d, 0), c);
  return p;
}

Polynomial Polynomial::linear(const Vector& v) {
  const auto d = static_cast<std::size_t>(v.size());
  Polynomial p(d);
  for (std::size_t j = 0; j < d; ++j) {
    Exponents e(d, 0);
    e[j] = 1;
    p.add_term(e, v(static_cast<Eigen::Index>(j)));
  }
  return p;
}

unsigned Polynomial::degree() const {
  unsigned out = 0;
  for (const auto& [e, c] : terms_) {
    unsigned total = 0;
    for (unsigned x : e) total += x;
    out = std::max(out, total);
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, Complex c) {
  check_dim(e.size(), d_);
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0.0) terms_.erase(it);
}

Complex Polynomial::evaluate(const Vector& u) const {
  check_dim(static_cast<std::size_t>(u.size()), d_);
  Complex out = 0.0;
  for (const auto& [e, c] : terms_) {
    double monomial = 1.0;
    for (std::size_t j = 0; j < d_; ++j) monomial *= std::pow(u(static_cast<Eigen::Index>(j)), static_cast<int>(e[j]));
    out += c * monomial;
  }
  return out;
}

Polynomial Polynomial::partial(std::size_t j) const {
  Polynomial out(d_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponents lowered = e;
    --lowered[j];
    out.add_term(lowered, c * static_cast<double>(e[j]));
  }
  return out;
}

Polynomial Polynomial::directional(const Vector& w) const {
  check_dim(static_cast<std::size_t>(w.size()), d_);
  Polynomial out(d_);
  for (std::size_t j = 0; j < d_; ++j) {
    const double wj = w(static_cast<Eigen::Index>(j));
    if (wj != 0.0) out = out + Complex(wj) * partial(j);
  }
  return out;
}

Polynomial Polynomial::translate(const Vector& w) const {
  check_dim(static_cast<std::size_t>(w.size()), d_);
  Polynomial out(d_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(d_, c);
    for (std::size_t j = 0; j < d_; ++j) {
      Polynomial shifted = constant(d_, w(static_cast<Eigen::Index>(j)));
      Exponents unit(d_, 0);
      unit[j] = 1;
      shifted.add_term(unit, 1.0);
      for (unsigned k = 0; k < e[j]; ++k) term = term * shifted;
    }
    out = out + term;
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_dim(a.d_, b.d_);
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Complex(-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_dim(a.d_, b.d_);
  Polynomial out(a.d_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e = ea;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(Complex c, const Polynomial& a) {
  Polynomial out(a.d_);
  for (const auto& [e, x] : a.terms_) out.add_term(e, c * x);
  return out;
}

TestFunction::TestFunction(Polynomial p, Matrix a, ComplexVector b, Complex c0)
    : p_(std::move(p)), a_(std::move(a)), b_(std::move(b)), c0_(c0) {
  const auto d = static_cast<Eigen::Index>(p_.dim());
  if (a_.rows() != d || a_.cols() != d || b_.size() != d) throw std::invalid_argument("Gaussian factor has wrong size");
  if ((a_ - a_.transpose()).cwiseAbs().maxCoeff() > 0.0) throw std::invalid_argument("A must be symmetric");
}

TestFunction::TestFunction(Polynomial p)
    : TestFunction(p, Matrix::Zero(static_cast<Eigen::Index>(p.dim()), static_cast<Eigen::Index>(p.dim())),
                   ComplexVector::Zero(static_cast<Eigen::Index>(p.dim()))) {}

Complex TestFunction::evaluate(const Vector& u) const {
  const Complex exponent = -0.5 * u.dot(a_ * u) + (b_.transpose() * u.cast<Complex>())(0) + c0_;
  return p_.evaluate(u) * std::exp(exponent);
}

TestFunction TestFunction::translate(const Vector& w) const {
  const ComplexVector aw = (a_ * w).cast<Complex>();
  const Complex shift = -0.5 * w.dot(a_ * w) + (b_.transpose() * w.cast<Complex>())(0);
  return {p_.translate(w), a_, b_ - aw, c0_ + shift};
}

TestFunction TestFunction::phase(const Vector& v) const {
  return exponential_factor(Complex(0.0, 1.0) * v.cast<Complex>(), 0.0);
}

TestFunction TestFunction::exponential_factor(const ComplexVector& beta, Complex gamma) const {
  check_dim(static_cast<std::size_t>(beta.size()), dim());
  return {p_, a_, b_ + beta, c0_ + gamma};
}

TestFunction TestFunction::multiply(const Polynomial& q) const { return {p_ * q, a_, b_, c0_}; }

TestFunction TestFunction::directional(const Vector& w) const {
  // d/dw [p g] = (d_w p + p (b.w - (A w).u)) g.
  Polynomial factor = Polynomial::linear(-(a_ * w));
  factor.add_term(Polynomial::Exponents(dim(), 0), (b_.transpose() * w.cast<Complex>())(0));
  return {p_.directional(w) + p_ * factor, a_, b_, c0_};
}

TestFunction operator+(const TestFunction& f, const TestFunction& g) {
  if (f.a_ != g.a_ || f.b_ != g.b_ || f.c0_ != g.c0_) {
    throw std::invalid_argument("test functions with different Gaussian factors cannot be added");
  }
  return {f.p_ + g.p_, f.a_, f.b_, f.c0_};
}

TestFunction operator-(const TestFunction& f, const TestFunction& g) { return f + Complex(-1.0) * g; }

TestFunction operator*(Complex c, const TestFunction& f) { return {c * f.p_, f.a_, f.b_, f.c0_}; }

TestFunction FunctionalRep::t(const Vector& v, const TestFunction& f) const { return f.phase(v); }

TestFunction FunctionalRep::p(const Vector& v, const TestFunction& f) const {
  // a(v, u) = exp(-M_K(Cv)/4 - <Cv, u>/2) is itself an exponential factor.
  const Vector cv = model_.c() * v;
  return f.translate(model_.embed(v)).exponential_factor(-0.5 * cv.cast<Complex>(), -0.25 * model_.covariance_form(cv));
}

TestFunction FunctionalRep::delta(const Vector& v, const TestFunction& f) const {
  return f.directional(model_.embed(v));
}

TestFunction FunctionalRep::phi(const Vector& v, const TestFunction& f) const {
  return f.multiply(Polynomial::linear(v));
}

TestFunction FunctionalRep::pi(const Vector& v, const TestFunction& f) const {
  const TestFunction shifted = delta(v, f) - f.multiply(Polynomial::linear(0.5 * (model_.c() * v)));
  return Complex(0.0, -1.0) * shifted;
}

TestFunction FunctionalRep::a_plus(const Vector& v, const TestFunction& f) const {
  return Complex(1.0 / std::sqrt(2.0)) * (phi(v, f) - Complex(0.0, 1.0) * pi(v, f));
}

TestFunction FunctionalRep::a_minus(const Vector& v, const TestFunction& f) const {
  return Complex(1.0 / std::sqrt(2.0)) * (phi(v, f) + Complex(0.0, 1.0) * pi(v, f));
}

double weyl_relation_residual(const FunctionalRep& rep, const Vector& v, const Vector& w, const TestFunction& f,
                              const Vector& u) {
  const Complex lhs = rep.p(v, rep.t(w, f)).evaluate(u);
  const Complex rhs = std::polar(1.0, rep.model().inner(v, w)) * rep.t(w, rep.p(v, f)).evaluate(u);
  return std::abs(lhs - rhs);
}

double functional_operator_residual(const FunctionalRep& rep, const Vector& v, const Vector& w,
                                    const TestFunction& f, const Vector& u) {
  const TestFunction bracket = rep.pi(v, rep.phi(w, f)) - rep.phi(w, rep.pi(v, f));
  return std::abs(bracket.evaluate(u) + Complex(0.0, rep.model().inner(v, w)) * f.evaluate(u));
}

std::vector<TestFunction> number_basis(const FunctionalRep& rep, std::size_t nmax) {
  if (rep.model().dim() != 1) throw std::invalid_argument("number basis is built for one mode");
  const Vector e = Vector::Ones(1);
  std::vector<TestFunction> out{TestFunction(Polynomial::constant(1, 1.0))};
  for (std::size_t n = 1; n <= nmax; ++n) {
    out.push_back(Complex(1.0 / std::sqrt(static_cast<double>(n))) * rep.a_plus(e, out.back()));
  }
  return out;
}

Eigen::MatrixXcd quadrature_gram(const GaussianModel& m, const std::vector<TestFunction>& left,
                                 const std::vector<TestFunction>& right, std::size_t nodes) {
  if (m.dim() != 1) throw std::invalid_argument("quadrature cross-check is one-dimensional");
  const QuadratureRule rule = gauss_hermite(nodes);
  const double scale = std::sqrt(2.0 * m.covariance()(0, 0));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(left.size()),
                                                static_cast<Eigen::Index>(right.size()));
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const Vector u = Vector::Constant(1, scale * rule.nodes[k]);
    const double w = rule.weights[k] / std::sqrt(M_PI);
    for (std::size_t i = 0; i < left.size(); ++i) {
      const Complex fi = std::conj(left[i].evaluate(u));
      for (std::size_t j = 0; j < right.size(); ++j) {
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += w * fi * right[j].evaluate(u);
      }
    }
  }
  return out;
}

}  // namespace ccr::measure
