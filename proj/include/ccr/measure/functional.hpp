// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

#include "ccr/measure/gaussian.hpp"

namespace ccr::measure {

using ComplexVector = Eigen::VectorXcd;

/// Complex polynomial on R^d, keyed by exponent vectors.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t d = 1) : d_(d) {}
  static Polynomial constant(std::size_t d, Complex c);
  /// u -> <v, u>.
  static Polynomial linear(const Vector& v);

  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] const std::map<Exponents, Complex>& terms() const { return terms_; }
  [[nodiscard]] unsigned degree() const;
  void add_term(const Exponents& e, Complex c);

  [[nodiscard]] Complex evaluate(const Vector& u) const;
  [[nodiscard]] Polynomial partial(std::size_t j) const;
  /// Derivative along the coordinate direction w.
  [[nodiscard]] Polynomial directional(const Vector& w) const;
  /// u -> p(u + w).
  [[nodiscard]] Polynomial translate(const Vector& w) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex c, const Polynomial& a);

 private:
  std::size_t d_;
  std::map<Exponents, Complex> terms_;
};

/// f(u) = p(u) exp(-u^T A u / 2 + b^T u + c0) with A real symmetric.
///
/// The class is closed under translation, linear phases, multiplication by
/// <v, u> and directional derivatives, all computed in closed form.
class TestFunction {
 public:
  TestFunction(Polynomial p, Matrix a, ComplexVector b, Complex c0 = 0.0);
  /// p times the constant Gaussian factor 1.
  explicit TestFunction(Polynomial p);

  [[nodiscard]] std::size_t dim() const { return p_.dim(); }
  [[nodiscard]] const Polynomial& polynomial() const { return p_; }

  [[nodiscard]] Complex evaluate(const Vector& u) const;
  /// u -> f(u + w).
  [[nodiscard]] TestFunction translate(const Vector& w) const;
  /// u -> exp(i <v, u>) f(u).
  [[nodiscard]] TestFunction phase(const Vector& v) const;
  /// u -> exp(<beta, u> + gamma) f(u).
  [[nodiscard]] TestFunction exponential_factor(const ComplexVector& beta, Complex gamma) const;
  [[nodiscard]] TestFunction multiply(const Polynomial& q) const;
  /// Exact derivative along the coordinate direction w.
  [[nodiscard]] TestFunction directional(const Vector& w) const;

  /// Sum of functions sharing the Gaussian factor; throws otherwise.
  friend TestFunction operator+(const TestFunction& f, const TestFunction& g);
  friend TestFunction operator-(const TestFunction& f, const TestFunction& g);
  friend TestFunction operator*(Complex c, const TestFunction& f);

 private:
  Polynomial p_;
  Matrix a_;
  ComplexVector b_;
  Complex c0_;
};

/// The representation of the Weyl group and of its Lie algebra in L^2(mu_K).
class FunctionalRep {
 public:
  explicit FunctionalRep(GaussianModel model) : model_(std::move(model)) {}
  [[nodiscard]] const GaussianModel& model() const { return model_; }

  /// T(v) f(u) = exp(i <v, u>) f(u).
  [[nodiscard]] TestFunction t(const Vector& v, const TestFunction& f) const;
  /// P(v) f(u) = a(v, u) f(u + u_v).
  [[nodiscard]] TestFunction p(const Vector& v, const TestFunction& f) const;

  /// delta_v f: derivative along u_v.
  [[nodiscard]] TestFunction delta(const Vector& v, const TestFunction& f) const;
  /// phi(v) f = <v, u> f.
  [[nodiscard]] TestFunction phi(const Vector& v, const TestFunction& f) const;
  /// pi(v) f = -i (delta_v f - <Cv, u> f / 2).
  [[nodiscard]] TestFunction pi(const Vector& v, const TestFunction& f) const;
  [[nodiscard]] TestFunction a_plus(const Vector& v, const TestFunction& f) const;
  [[nodiscard]] TestFunction a_minus(const Vector& v, const TestFunction& f) const;

 private:
  GaussianModel model_;
};

/// |(P(v) T(w) f)(u) - exp(i <v|w>) (T(w) P(v) f)(u)|.
double weyl_relation_residual(const FunctionalRep& rep, const Vector& v, const Vector& w, const TestFunction& f,
                              const Vector& u);

/// |([pi(v), phi(w)] f)(u) + i <v|w> f(u)|.
double functional_operator_residual(const FunctionalRep& rep, const Vector& v, const Vector& w,
                                    const TestFunction& f, const Vector& u);

/// d = 1: the orthonormal basis (a+)^n 1 / sqrt(n!), n <= nmax, of L^2(mu).
std::vector<TestFunction> number_basis(const FunctionalRep& rep, std::size_t nmax);

/// d = 1: <f_m | f_n>_mu by Gauss-Hermite quadrature for purely polynomial
/// functions.
Eigen::MatrixXcd quadrature_gram(const GaussianModel& m, const std::vector<TestFunction>& left,
                                 const std::vector<TestFunction>& right, std::size_t nodes = 64);

}  // namespace ccr::measure
