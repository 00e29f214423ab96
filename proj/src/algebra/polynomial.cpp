// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/algebra/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ccr {

namespace {

struct Registry {
  std::mutex mutex;
  std::vector<std::string> names{"kappa", "s"};
  std::unordered_map<std::string, int> ids{{"kappa", 0}, {"s", 1}};
};

Registry& registry() {
  static Registry r;
  return r;
}

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

bool divides(const Monomial& d, const Monomial& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] > m[k]) return false;
  }
  return true;
}

Monomial monomial_div(const Monomial& m, const Monomial& d) {
  Monomial out = m;
  for (std::size_t k = 0; k < d.size(); ++k) out[k] = static_cast<std::uint16_t>(out[k] - d[k]);
  trim(out);
  return out;
}

Monomial monomial_min(const Monomial& a, const Monomial& b) {
  Monomial out(std::min(a.size(), b.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::min(a[k], b[k]);
  trim(out);
  return out;
}

std::uint16_t exponent(const Monomial& m, int var) {
  return static_cast<std::size_t>(var) < m.size() ? m[var] : 0;
}

Monomial with_exponent(Monomial m, int var, std::uint16_t e) {
  if (static_cast<std::size_t>(var) >= m.size()) m.resize(var + 1, 0);
  m[var] = e;
  trim(m);
  return m;
}

Poly leading_coeff_in(const Poly& p, int var) {
  auto coeffs = p.coefficients_in(var);
  return coeffs.rbegin()->second;
}

Poly shift(const Poly& p, int var, int power) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    out.add_term(with_exponent(m, var, static_cast<std::uint16_t>(exponent(m, var) + power)), c);
  }
  return out;
}

Poly content_in(const Poly& p, int var) {
  Poly g;
  for (const auto& [k, c] : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, int var) {
  if (p.is_zero()) return p;
  return *p.divide_exact(content_in(p, var));
}

// Sparse pseudo-remainder of a by b with respect to var.
Poly pseudo_remainder(Poly a, const Poly& b, int var) {
  const int db = b.degree_in(var);
  const Poly lb = leading_coeff_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const Poly la = leading_coeff_in(a, var);
    a = lb * a - shift(la * b, var, da - db);
  }
  return a;
}

Poly monomial_gcd(const Poly& single, const Poly& other) {
  Monomial m = single.leading_monomial();
  for (const auto& [mono, c] : other.terms()) {
    m = monomial_min(m, mono);
    if (m.empty()) break;
  }
  return Poly::monomial(m, Number(1));
}

}  // namespace

int ParamRegistry::id(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.ids.find(name);
  if (it != r.ids.end()) return it->second;
  const int next = static_cast<int>(r.names.size());
  r.names.push_back(name);
  r.ids.emplace(name, next);
  return next;
}

std::string ParamRegistry::name(int id) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (id < 0 || static_cast<std::size_t>(id) >= r.names.size()) {
    throw std::out_of_range("unknown parameter id");
  }
  return r.names[id];
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = static_cast<std::uint16_t>(out[k] + b[k]);
  return out;
}

Poly::Poly(Number c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Poly Poly::variable(int id, std::uint16_t power) {
  return monomial(with_exponent({}, id, power), Number(1));
}

Poly Poly::monomial(Monomial m, Number c) {
  Poly p;
  trim(m);
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

Number Poly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Number() : it->second;
}

int Poly::max_var() const {
  int v = -1;
  for (const auto& [m, c] : terms_) v = std::max(v, static_cast<int>(m.size()) - 1);
  return v;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, exponent(m, var));
  return d;
}

std::map<int, Poly> Poly::coefficients_in(int var) const {
  std::map<int, Poly> out;
  for (const auto& [m, c] : terms_) {
    out[exponent(m, var)].add_term(with_exponent(m, var, 0), c);
  }
  return out;
}

Poly Poly::conj() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

bool Poly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

std::set<int> Poly::vars() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] != 0) out.insert(static_cast<int>(k));
    }
  }
  return out;
}

std::complex<double> Poly::evaluate(const std::vector<std::optional<double>>& values) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (k >= values.size() || !values[k]) {
        throw std::invalid_argument("missing assignment for parameter '" +
                                    ParamRegistry::name(static_cast<int>(k)) + "'");
      }
      term *= std::pow(*values[k], static_cast<int>(m[k]));
    }
    sum += term;
  }
  return sum;
}

void Poly::add_term(const Monomial& m, const Number& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  }
  return out;
}

Poly operator*(const Poly& a, const Number& c) {
  if (c.is_zero()) return {};
  Poly out;
  for (const auto& [m, x] : a.terms_) out.terms_.emplace(m, x * c);
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (divisor.is_constant()) return *this * divisor.constant().inverse();
  const Monomial& lm = divisor.leading_monomial();
  const Number lc_inv = divisor.leading_coefficient().inverse();
  Poly quotient;
  Poly rest = *this;
  while (!rest.is_zero()) {
    const Monomial& rm = rest.leading_monomial();
    if (!divides(lm, rm)) return std::nullopt;
    Poly step = monomial(monomial_div(rm, lm), rest.leading_coefficient() * lc_inv);
    quotient = quotient + step;
    rest = rest - step * divisor;
  }
  return quotient;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

std::size_t Poly::printed_terms() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) {
    int parts = (sgn(c.base().re) != 0) + (sgn(c.base().im) != 0) + (sgn(c.root().re) != 0) +
                (sgn(c.root().im) != 0);
    n += m.empty() ? parts : 1;
  }
  return n;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ParamRegistry::name(static_cast<int>(k));
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    std::string coef = c.to_string();
    std::string term;
    bool negative = false;
    if (mono.empty()) {
      term = coef;
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = mono;
      negative = true;
    } else {
      term = coef + "*" + mono;
    }
    if (!negative && term.size() > 1 && term[0] == '-' ) {
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

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Number(1));
  if (a.terms().size() == 1) return monomial_gcd(a, b);
  if (b.terms().size() == 1) return monomial_gcd(b, a);
  if (a == b) return a.monic();

  const int var = std::max(a.max_var(), b.max_var());
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  Poly pa = *a.divide_exact(ca);
  Poly pb = *b.divide_exact(cb);
  const Poly c = gcd(ca, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return (c * primitive_part(pa, var)).monic();
}

}  // namespace ccr
