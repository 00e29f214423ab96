// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/acceptance/acceptance.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ccr/algebra/normal_form.hpp"
#include "ccr/fock/spectrum.hpp"
#include "ccr/hopf/axioms.hpp"
#include "ccr/measure/functional.hpp"
#include "ccr/measure/weyl.hpp"

namespace ccr::acceptance {

namespace {

using nlohmann::json;

json metric(double value, double tolerance) { return {{"value", value}, {"tolerance", tolerance}}; }

std::mt19937_64 stream(std::uint64_t seed, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------- algebra

Expr gen(Generator g) { return Expr::generator(g); }

CriterionResult exact_ccr(std::uint64_t) {
  CriterionResult r;
  const Expr pi0 = gen(Generator::pi(0));
  const Expr phi0 = gen(Generator::phi(0));
  const Expr deformed = commutator(pi0, phi0, Presentation::deformed_strict());
  const Expr undeformed = commutator(pi0, phi0, Presentation::undeformed());
  const Expr want_deformed = -Scalar::i() * Scalar::param("kappa") * gen(Generator::unit_I());
  const Expr want_undeformed = -Scalar::i() * gen(Generator::unit_I());
  r.pass = deformed == want_deformed && undeformed == want_undeformed;
  r.metrics = {{"deformed", deformed.to_string()}, {"undeformed", undeformed.to_string()}};
  r.detail = "[pi(0), phi(0)] = " + deformed.to_string() + " (deformed), " + undeformed.to_string() + " (undeformed)";
  return r;
}

Word random_word(std::mt19937_64& rng, const Presentation& p, std::uint32_t modes, std::size_t max_degree) {
  std::vector<Generator> letters{Generator::unit_I()};
  if (p.variant != Variant::Undeformed) {
    letters.push_back(Generator::k());
    letters.push_back(Generator::k_inv());
  }
  for (std::uint32_t j = 0; j < modes; ++j) {
    for (auto g : {Generator::phi(j), Generator::pi(j), Generator::a_plus(j), Generator::a_minus(j)}) letters.push_back(g);
  }
  std::uniform_int_distribution<std::size_t> len(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w(len(rng));
  for (auto& g : w) g = letters[pick(rng)];
  return w;
}

CriterionResult confluence(std::uint64_t seed) {
  auto rng = stream(seed, 2);
  const std::vector<Presentation> presentations{Presentation::undeformed(), Presentation::deformed_strict(),
                                                Presentation::deformed_collapsed()};
  std::uniform_int_distribution<std::uint32_t> modes(1, 4);
  std::size_t mismatches = 0;
  std::size_t terms = 0;
  std::string first_failure;
  const int n = 1000;
  for (int k = 0; k < n; ++k) {
    const Presentation& p = presentations[static_cast<std::size_t>(k) % presentations.size()];
    const Expr e = Expr::word(random_word(rng, p, modes(rng), 8));
    const Expr left = normal_form(e, p, {RewriteSchedule::Kind::Leftmost, 0});
    const Expr random = normal_form(e, p, {RewriteSchedule::Kind::Random, rng()});
    terms += left.size();
    if (!(left == random)) {
      if (mismatches++ == 0) first_failure = e.to_string();
    }
  }
  CriterionResult r;
  r.pass = mismatches == 0;
  r.metrics = {{"words", n}, {"mismatches", mismatches}, {"total_terms", terms},
               {"schedules", {"leftmost", "random"}}};
  if (!first_failure.empty()) r.metrics["first_failure"] = first_failure;
  r.detail = std::to_string(n) + " words, " + std::to_string(mismatches) + " schedule mismatches";
  return r;
}

CriterionResult collapse_identity(std::uint64_t seed) {
  const auto p = Presentation::deformed_collapsed();
  const Expr k = gen(Generator::k());
  const Expr kinv = gen(Generator::k_inv());
  const Expr expanded = expand_k(k * k - kinv * kinv, p);
  const Scalar s = Scalar::param("s");
  const Expr want = (s * s - s.pow(-2)) * gen(Generator::unit_I());
  const bool exact = expanded == want;

  auto rng = stream(seed, 3);
  std::uniform_real_distribution<double> q_dist(0.5, 3.0);
  std::uniform_real_distribution<double> c_dist(0.1, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double q = q_dist(rng);
    const double c = c_dist(rng);
    const double sv = std::pow(q, c / 2.0);
    const double ratio = (sv * sv - 1.0 / (sv * sv)) / (c * (q - 1.0 / q));
    worst = std::max(worst, std::abs(ratio - deformation_constant(q, c)));
  }
  CriterionResult r;
  r.pass = exact && worst < 1e-12;
  r.metrics = {{"expand_k", expanded.to_string()}, {"exact", exact}, {"numeric_max_error", metric(worst, 1e-12)}};
  r.detail = "expand_k(K^2 - Kinv^2) = " + expanded.to_string() + "; max numeric error " + fmt(worst);
  return r;
}

CriterionResult special_cases(std::uint64_t seed) {
  auto rng = stream(seed, 4);
  std::uniform_real_distribution<double> q_dist(0.1, 10.0);
  std::uniform_real_distribution<double> c_dist(0.1, 3.0);
  double worst_c1 = 0.0;
  for (int i = 0; i < 100; ++i) worst_c1 = std::max(worst_c1, std::abs(deformation_constant(q_dist(rng), 1.0) - 1.0));
  double worst_q1 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double c = c_dist(rng);
    for (double q : {1.0 + 1e-5, 1.0 - 1e-5}) worst_q1 = std::max(worst_q1, std::abs(deformation_constant(q, c) - 1.0));
  }
  CriterionResult r;
  r.pass = worst_c1 < 1e-12 && worst_q1 < 1e-8;
  r.metrics = {{"c_equals_1_max_error", metric(worst_c1, 1e-12)}, {"q_near_1_max_deviation", metric(worst_q1, 1e-8)}};
  r.detail = "|C(q,1) - 1| <= " + fmt(worst_c1) + ", |C(1 +- 1e-5, c) - 1| <= " + fmt(worst_q1);
  return r;
}

// ------------------------------------------------------------------- hopf

json axiom_json(const hopf::AxiomReport& a) {
  json out = {{"axiom", a.axiom}, {"degree", a.degree}, {"checked", a.checked}, {"pass", a.pass()}};
  json ce = json::array();
  for (const auto& c : a.counterexamples) ce.push_back({{"subject", c.subject}, {"map", c.map}, {"residual", c.residual_string()}});
  out["counterexamples"] = ce;
  if (!a.notes.empty()) out["notes"] = a.notes;
  return out;
}

CriterionResult classical_axioms(std::uint64_t) {
  const auto h = hopf::HopfSpec::classical();
  const auto p = Presentation::deformed_strict();
  const hopf::Window w{2, 3};
  CriterionResult r;
  r.pass = true;
  json reports = json::array();
  for (const auto& a : {hopf::check_coassociativity(h, p, w), hopf::check_counit(h, p, w), hopf::check_antipode(h, p, w),
                        hopf::cocommutativity_probe(h, p, w)}) {
    r.pass = r.pass && a.pass() && a.checked > 0;
    reports.push_back(axiom_json(a));
  }
  r.metrics = {{"reports", reports}};
  r.detail = "coassociativity, counit, antipode, cocommutativity over " + std::to_string(reports[0]["checked"].get<std::size_t>()) +
             " words of degree <= 3, d = 2";
  return r;
}

const hopf::Counterexample* find_counterexample(const hopf::AxiomReport& a, const std::string& subject) {
  for (const auto& c : a.counterexamples) {
    if (c.subject == subject) return &c;
  }
  return nullptr;
}

CriterionResult deformed_axioms(std::uint64_t) {
  const auto h = hopf::HopfSpec::deformed();
  const auto p = Presentation::deformed_strict();
  const hopf::Window w{2, 2};
  CriterionResult r;
  bool ok = true;
  json reports = json::array();
  for (const auto& a : {hopf::check_multiplicativity(h, p, w), hopf::check_counit(h, p, w), hopf::check_antipode(h, p, w)}) {
    ok = ok && a.pass() && a.checked > 0;
    reports.push_back(axiom_json(a));
  }
  const auto cocomm = hopf::cocommutativity_probe(h, p, w);
  const auto* c = find_counterexample(cocomm, "phi(0)");
  const Expr phi0 = gen(Generator::phi(0));
  const Expr k = gen(Generator::k());
  const Expr kinv = gen(Generator::k_inv());
  const hopf::TensorExpr witness =
      hopf::TensorExpr::product({phi0, k - kinv}) + hopf::TensorExpr::product({kinv - k, phi0});
  const bool witness_ok = c != nullptr && std::holds_alternative<hopf::TensorExpr>(c->residual) &&
                          std::get<hopf::TensorExpr>(c->residual) == witness;
  auto trivial = p;
  trivial.s = Scalar(1);
  const auto cocomm_trivial = hopf::cocommutativity_probe(h, trivial, w);
  r.pass = ok && !cocomm.pass() && witness_ok && cocomm_trivial.pass();
  r.metrics = {{"reports", reports},
               {"cocommutativity_fails", !cocomm.pass()},
               {"witness", witness.to_string()},
               {"witness_matches", witness_ok},
               {"cocommutative_at_s_equal_1", cocomm_trivial.pass()}};
  r.detail = "bialgebra axioms at degree <= 2; cocommutativity witness " + witness.to_string();
  return r;
}

CriterionResult collapsed_diagnostics(std::uint64_t) {
  const auto a = hopf::check_respects_relations(hopf::HopfSpec::classical(), Presentation::deformed_collapsed());
  const Expr i = gen(Generator::unit_I());
  bool delta_ok = false;
  bool s_ok = false;
  for (const auto& c : a.counterexamples) {
    if (c.subject != "I^2 = I") continue;
    if (c.map == "coproduct" && std::holds_alternative<hopf::TensorExpr>(c.residual)) {
      delta_ok = std::get<hopf::TensorExpr>(c.residual) == Scalar(2) * hopf::TensorExpr::product({i, i});
    }
    if (c.map == "antipode" && std::holds_alternative<Expr>(c.residual)) {
      s_ok = std::get<Expr>(c.residual) == Scalar(2) * i;
    }
  }
  CriterionResult r;
  r.pass = delta_ok && s_ok && a.counterexamples.size() == 2;
  r.metrics = {{"report", axiom_json(a)},
               {"finding", "primitive Delta(I) and S(I) = -I do not respect I^2 = I; reported, not repaired"}};
  r.detail = "I^2 = I residuals: coproduct 2*(I ⊗ I), antipode 2*I (finding)";
  return r;
}

// ------------------------------------------------------------------- fock

fock::ModeVector random_mode_vector(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  fock::ModeVector v(static_cast<Eigen::Index>(d));
  for (auto& x : v) x = g(rng);
  return v;
}

fock::SparseOperator commutator_matrix(const fock::SparseOperator& a, const fock::SparseOperator& b) {
  fock::SparseOperator ab = a * b;
  fock::SparseOperator ba = b * a;
  return ab - ba;
}

CriterionResult fock_numerics(std::uint64_t seed) {
  auto rng = stream(seed, 8);
  const fock::ModeSpace m(2, 10);
  const fock::Ladder l = fock::ladder_matrices(m);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto v = random_mode_vector(rng, 2);
    const auto w = random_mode_vector(rng, 2);
    const auto c = commutator_matrix(fock::annihilation(m, l, v), fock::creation(m, l, w));
    worst = std::max(worst, fock::max_abs_on_columns(c, fock::Complex(m.inner(v, w)) * m.identity(), m.safe_indices(2)));
  }
  const double exact = std::exp(-0.25);
  json sweep = json::array();
  double z20_error = 0.0;
  bool monotone = true;
  double previous = 1.0;
  for (std::size_t nmax : {5, 10, 20, 40}) {
    const fock::ModeSpace m1(1, nmax);
    const auto z = fock::vacuum_generating_function(m1, fock::ladder_matrices(m1), m1.basis_vector(0));
    const double err = std::abs(z - exact);
    if (nmax == 20) z20_error = err;
    // Ties are allowed once the error is at roundoff level.
    monotone = monotone && err <= std::max(previous, 1e-15);
    previous = err;
    sweep.push_back({{"nmax", nmax}, {"error", metric(err, 1e-8)}});
  }
  CriterionResult r;
  r.pass = worst < 1e-12 && z20_error < 1e-8 && monotone;
  r.metrics = {{"ladder_commutator_residual", metric(worst, 1e-12)},
               {"genfun_error_nmax20", metric(z20_error, 1e-8)},
               {"truncation_sweep", sweep},
               {"monotone", monotone}};
  r.detail = "commutator residual " + fmt(worst) + ", |Z - exp(-1/4)| = " + fmt(z20_error) + " at nmax 20";
  return r;
}

Expr random_expr(std::mt19937_64& rng, bool group_like) {
  std::vector<Generator> letters{Generator::unit_I()};
  if (group_like) {
    letters.push_back(Generator::k());
    letters.push_back(Generator::k_inv());
  }
  for (std::uint32_t j = 0; j < 2; ++j) {
    for (auto g : {Generator::phi(j), Generator::pi(j), Generator::a_plus(j), Generator::a_minus(j)}) letters.push_back(g);
  }
  std::uniform_int_distribution<std::size_t> len(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> count(1, 3);
  Expr e;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Word w(len(rng));
    for (auto& g : w) g = letters[pick(rng)];
    Scalar c(Number(GaussRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)))));
    if (c.is_zero()) c = Scalar(1);
    switch (rng() % 4) {
      case 0: c *= Scalar::param("kappa"); break;
      case 1: c *= Scalar::param("s"); break;
      case 2: c *= Scalar::r2(); break;
      default: break;
    }
    e.add_term(w, c);
  }
  return e;
}

CriterionResult functor_property(std::uint64_t seed) {
  auto rng = stream(seed, 9);
  const fock::ModeSpace m(2, 9);
  const fock::Ladder l = fock::ladder_matrices(m);
  const auto safe = m.safe_indices(3);
  const double q = 1.4;
  const double c = 0.6;
  const double kappa = deformation_constant(q, c);
  const double s = std::pow(q, c / 2.0);
  double worst = 0.0;
  const int n = 200;
  for (int k = 0; k < n; ++k) {
    const bool deformed = k % 2 == 1;
    const Presentation p = deformed ? Presentation::deformed_strict() : Presentation::undeformed();
    const Assignment values{{"kappa", deformed ? kappa : 1.0}, {"s", s}};
    const fock::Representation rep{deformed ? kappa : 1.0, deformed ? s : 1.0};
    const Expr e = random_expr(rng, deformed);
    const auto direct = fock::represent(e, m, l, values, rep);
    const auto reduced = fock::represent(normal_form(e, p), m, l, values, rep);
    worst = std::max(worst, fock::max_abs_on_columns(direct, reduced, safe));
  }
  CriterionResult r;
  r.pass = worst < 1e-10;
  r.metrics = {{"exprs", n}, {"max_residual", metric(worst, 1e-10)}, {"d", 2}, {"nmax", 9}};
  r.detail = std::to_string(n) + " random expressions, max residual " + fmt(worst);
  return r;
}

CriterionResult transfer_map(std::uint64_t seed) {
  auto rng = stream(seed, 10);
  std::uniform_real_distribution<double> q_dist(0.5, 3.0);
  std::uniform_real_distribution<double> c_dist(0.1, 3.0);
  const fock::ModeSpace m(2, 8);
  const fock::Ladder l = fock::ladder_matrices(m);
  const auto safe = m.safe_indices(2);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto rep = fock::transfer_rep(q_dist(rng), c_dist(rng));
    const auto v = random_mode_vector(rng, 2);
    const auto w = random_mode_vector(rng, 2);
    const auto c = commutator_matrix(fock::transfer_fields(m, l, rep, v).pi, fock::transfer_fields(m, l, rep, w).phi);
    const fock::SparseOperator want = fock::Complex(0.0, -rep.pi_scale * m.inner(v, w)) * m.identity();
    worst = std::max(worst, fock::max_abs_on_columns(c, want, safe));
  }
  CriterionResult r;
  r.pass = worst < 1e-12;
  r.metrics = {{"samples", 20}, {"max_residual", metric(worst, 1e-12)}};
  r.detail = "max |[pi_qc(v), phi(w)] + i C <v|w>| = " + fmt(worst);
  return r;
}

CriterionResult boundedness(std::uint64_t) {
  const double r_value = 0.5 * std::log(2.0);
  const std::vector<std::size_t> ds{1, 2, 3};
  const std::size_t nmax = 30;
  const auto uniform = fock::boundedness_trend(
      "uniform", [&](std::size_t d) { return fock::BogoliubovSpec::uniform(d, r_value); }, ds, nmax);
  const auto summable = fock::boundedness_trend(
      "summable", [&](std::size_t d) { return fock::BogoliubovSpec::summable(d, r_value); }, ds, nmax);

  bool linear_ok = true;
  json uniform_rows = json::array();
  for (const auto& rep : uniform.reports) {
    const double target = static_cast<double>(rep.d) / 8.0;
    const double rel = std::abs(rep.lowest.front() - target) / target;
    linear_ok = linear_ok && rel <= 0.02;
    uniform_rows.push_back({{"d", rep.d},
                            {"min_eigenvalue", rep.lowest.front()},
                            {"target", target},
                            {"relative_error", metric(rel, 0.02)},
                            {"converged", rep.converged},
                            {"fock_vacuum_expectation", rep.fock_vacuum_expectation}});
  }
  double bound = 0.0;
  for (int j = 0; j < 64; ++j) bound += std::pow(std::sinh(std::ldexp(r_value, -j)), 2);
  bool plateau_ok = true;
  json summable_rows = json::array();
  for (const auto& rep : summable.reports) {
    plateau_ok = plateau_ok && rep.lowest.front() <= bound;
    summable_rows.push_back({{"d", rep.d},
                             {"min_eigenvalue", rep.lowest.front()},
                             {"bound", bound},
                             {"converged", rep.converged},
                             {"fock_vacuum_expectation", rep.fock_vacuum_expectation}});
  }
  const double su = uniform.min_eigenvalue_slope;
  const double ss = summable.min_eigenvalue_slope;
  // The ratio is only meaningful for a positive uniform slope that dominates.
  const bool slopes_ok = su > 0.0 && su >= 5.0 * std::abs(ss);
  const double ratio = std::abs(ss) > 0.0 ? su / std::abs(ss) : 0.0;
  CriterionResult r;
  r.pass = linear_ok && plateau_ok && slopes_ok;
  r.metrics = {{"nmax", nmax},
               {"r", r_value},
               {"uniform", uniform_rows},
               {"summable", summable_rows},
               {"uniform_slope", su},
               {"summable_slope", ss},
               {"slope_ratio", metric(ratio, 5.0)},
               {"diagnostic_vacuum_expectation_slopes",
                {{"uniform", uniform.vacuum_expectation_slope}, {"summable", summable.vacuum_expectation_slope}}}};
  r.detail = "min-eig uniform d=1..3: " + fmt(uniform.reports[0].lowest.front()) + ", " +
             fmt(uniform.reports[1].lowest.front()) + ", " + fmt(uniform.reports[2].lowest.front()) +
             " (target d/8); slopes " + fmt(su) + " vs " + fmt(ss);
  return r;
}

// ---------------------------------------------------------------- measure

measure::Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  measure::Vector v(static_cast<Eigen::Index>(d));
  for (auto& x : v) x = g(rng);
  return v;
}

measure::TestFunction random_test_function(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 0.4);
  const auto n = static_cast<Eigen::Index>(d);
  measure::Matrix b(n, n);
  for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = g(rng);
  measure::Matrix a = b * b.transpose();
  a = 0.5 * (a + a.transpose());
  measure::ComplexVector beta(n);
  for (auto& x : beta) x = measure::Complex(g(rng), g(rng));
  measure::Polynomial p(d);
  for (int t = 0; t < 4; ++t) {
    measure::Polynomial::Exponents e(d, 0);
    const unsigned degree = static_cast<unsigned>(rng() % 4);
    for (unsigned k = 0; k < degree; ++k) ++e[rng() % d];
    p.add_term(e, measure::Complex(g(rng), g(rng)));
  }
  return {p, a, beta, 0.0};
}

CriterionResult measure_module(std::uint64_t seed) {
  auto rng = stream(seed, 12);
  measure::Matrix k2(2, 2);
  k2 << 1.3, 0.4, -0.2, 0.9;
  measure::Matrix g2(2, 2);
  g2 << 1.5, 0.3, 0.3, 0.7;
  const std::vector<measure::GaussianModel> models{measure::GaussianModel::fock(2), measure::GaussianModel(k2, g2)};
  double cocycle = 0.0;
  double rn = 0.0;
  double eta_err = 0.0;
  double weyl = 0.0;
  for (const auto& m : models) {
    const measure::FunctionalRep rep(m);
    for (int i = 0; i < 100; ++i) {
      const auto v = random_vector(rng, 2);
      const auto w = random_vector(rng, 2);
      const auto u = random_vector(rng, 2);
      cocycle = std::max(cocycle, measure::cocycle_identity_residual(m, v, w, u));
      rn = std::max(rn, measure::radon_nikodym_residual(m, v, u));
      eta_err = std::max(eta_err, std::abs(measure::eta(m, v, u).value - measure::eta_closed_form(m, v, u)));
      weyl = std::max(weyl, measure::weyl_relation_residual(rep, v, w, random_test_function(rng, 2), u));
    }
  }
  measure::Vector v(2);
  v << 1.0, -0.5;
  double sigmas = 0.0;
  json bochner = json::array();
  for (std::size_t k = 0; k < models.size(); ++k) {
    const auto mc = measure::bochner_mc(models[k], v, 100000, seed + k);
    const double target = models[k].generating_function(v);
    const double z = std::abs(mc.mean.real() - target) / mc.stderr_re;
    sigmas = std::max(sigmas, z);
    bochner.push_back({{"model", k},
                       {"estimate", mc.mean.real()},
                       {"stderr", mc.stderr_re},
                       {"target", target},
                       {"sigmas", metric(z, 3.0)},
                       {"samples", mc.samples}});
  }
  CriterionResult r;
  r.pass = cocycle < 1e-10 && rn < 1e-10 && eta_err < 1e-8 && sigmas <= 3.0 && weyl < 1e-10;
  r.metrics = {{"cocycle_residual", metric(cocycle, 1e-10)},
               {"radon_nikodym_residual", metric(rn, 1e-10)},
               {"eta_error", metric(eta_err, 1e-8)},
               {"weyl_residual", metric(weyl, 1e-10)},
               {"bochner", bochner}};
  r.detail = "cocycle " + fmt(cocycle) + ", RN " + fmt(rn) + ", eta " + fmt(eta_err) + ", Weyl " + fmt(weyl) +
             ", Bochner " + fmt(sigmas) + " sigma";
  return r;
}

using Runner = std::function<CriterionResult(std::uint64_t)>;

const std::vector<std::pair<std::string, Runner>>& table() {
  static const std::vector<std::pair<std::string, Runner>> t{
      {"exact CCR normal forms", exact_ccr},
      {"confluence under two rewrite schedules", confluence},
      {"collapse identity and deformation constant", collapse_identity},
      {"deformation constant special cases", special_cases},
      {"classical Hopf axioms over the strict presentation", classical_axioms},
      {"deformed-strict bialgebra axioms and cocommutativity witness", deformed_axioms},
      {"collapsed-mode relation diagnostics", collapsed_diagnostics},
      {"Fock ladder commutator and vacuum generating function", fock_numerics},
      {"representation functor property", functor_property},
      {"transfer map commutator", transfer_map},
      {"boundedness trend of the transformed number operator", boundedness},
      {"measure module identities and Bochner estimate", measure_module},
      {"selftest determinism", nullptr},
  };
  return t;
}

std::vector<CriterionResult> run_range(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id < kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

json range_json(const std::vector<CriterionResult>& results) {
  json out = json::array();
  for (const auto& r : results) out.push_back(to_json(r));
  return out;
}

CriterionResult determinism(const std::string& a, const std::string& b) {
  CriterionResult r;
  r.id = kCriterionCount;
  r.title = criterion_title(kCriterionCount);
  r.pass = a == b;
  r.metrics = {{"bytes", a.size()}, {"identical", r.pass}};
  r.detail = "two runs with the same seed: " + std::string(r.pass ? "identical" : "different") + " (" +
             std::to_string(a.size()) + " bytes)";
  return r;
}

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  return table()[static_cast<std::size_t>(id - 1)].first;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  if (id == kCriterionCount) {
    return determinism(suite_report(seed).dump(), suite_report(seed).dump());
  }
  CriterionResult r = table()[static_cast<std::size_t>(id - 1)].second(seed);
  r.id = id;
  r.title = criterion_title(id);
  return r;
}

json suite_report(std::uint64_t seed) { return range_json(run_range(seed)); }

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> first = run_range(seed);
  const std::string a = range_json(first).dump();
  const std::string b = suite_report(seed).dump();
  first.push_back(determinism(a, b));
  return first;
}

json to_json(const CriterionResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"metrics", r.metrics}};
}

}  // namespace ccr::acceptance
