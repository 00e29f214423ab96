// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/cli/commands.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "ccr/acceptance/acceptance.hpp"
#include "ccr/algebra/normal_form.hpp"
#include "ccr/cli/parser.hpp"
#include "ccr/fock/spectrum.hpp"
#include "ccr/hopf/hopf.hpp"
#include "ccr/measure/functional.hpp"
#include "ccr/measure/weyl.hpp"

namespace ccr::cli {

namespace {

using nlohmann::json;

constexpr double kLadderTolerance = 1e-12;
constexpr double kGenfunTolerance = 1e-8;
constexpr double kTransferTolerance = 1e-12;
constexpr double kSpectrumFloor = 1e-9;
constexpr double kMeasureTolerance = 1e-10;
constexpr double kEtaTolerance = 1e-8;
constexpr double kSigmaBound = 3.0;

// FNV-1a, so the stream per command does not depend on the standard library.
std::uint32_t tag(const std::string& text) {
  std::uint32_t h = 2166136261u;
  for (const char ch : text) h = (h ^ static_cast<unsigned char>(ch)) * 16777619u;
  return h;
}

std::mt19937_64 rng_for(const CommandConfig& config, const std::string& command) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    tag(command)};
  return std::mt19937_64(seq);
}

Eigen::VectorXd random_vector(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(static_cast<Eigen::Index>(d));
  for (auto& x : v) x = g(rng);
  return v;
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Expr operand(const Request& r, std::size_t k, const Presentation& p) {
  if (k >= r.operands.size()) throw ConfigError(r.command + " needs " + std::to_string(k + 1) + " expression(s)");
  return parse_expr(r.operands[k], &p);
}

hopf::HopfSpec hopf_spec(const CommandConfig& config) {
  return config.flavor == "deformed" ? hopf::HopfSpec::deformed() : hopf::HopfSpec::classical();
}

void put_expr(ReportDocument& doc, const std::string& key, const Expr& e, const Presentation& p,
              const CommandConfig& config) {
  doc.results[key] = expr_json(e);
  if (config.numeric_mode()) doc.results[key + "_numeric"] = numeric_expr_json(e, p.numeric_assignment());
}

// ------------------------------------------------------------- symbolic

ReportDocument algebra_command(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const Presentation p = config.presentation();
  const Expr x = operand(r, 0, p);
  doc.results["input"] = r.operands;
  if (r.command == "normalize") {
    put_expr(doc, "normal_form", normal_form(x, p), p, config);
  } else if (r.command == "commutator") {
    put_expr(doc, "commutator", commutator(x, operand(r, 1, p), p), p, config);
  } else if (r.command == "adjoint") {
    put_expr(doc, "adjoint", normal_form(adjoint(x), p), p, config);
  } else if (r.command == "convert") {
    Basis target;
    try {
      target = parse_basis(r.to);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    put_expr(doc, "converted", basis_convert(x, target, p), p, config);
    doc.results["target_basis"] = to_string(target);
  } else if (r.command == "coproduct") {
    doc.results["coproduct"] = tensor_json(hopf::coproduct(x, hopf_spec(config), p));
  } else if (r.command == "counit") {
    doc.results["counit"] = scalar_json(hopf::counit(normal_form(x, p), hopf_spec(config)));
  } else {
    put_expr(doc, "antipode", hopf::antipode(x, hopf_spec(config), p), p, config);
  }
  return doc;
}

ReportDocument hopf_check(const CommandConfig& config) {
  ReportDocument doc;
  const auto h = hopf_spec(config);
  const auto p = config.presentation();
  const hopf::Window window{static_cast<std::uint32_t>(config.d), config.degree};
  json reports = json::array();
  for (const auto& a : hopf::check_all(h, p, window)) {
    reports.push_back(axiom_json(a));
    // Relation compatibility and the deformed cocommutativity probe describe
    // the structure rather than verify it.
    const bool finding =
        a.axiom == "respects_relations" || (a.axiom == "cocommutativity" && h.flavor() == hopf::Flavor::Deformed);
    if (finding) {
      if (!a.pass()) {
        doc.findings.push_back({{"axiom", a.axiom}, {"counterexamples", a.counterexamples.size()},
                                {"first", a.counterexamples.front().subject + " [" + a.counterexamples.front().map +
                                              "]: " + a.counterexamples.front().residual_string()}});
      }
      continue;
    }
    doc.checks.push_back({a.axiom, a.pass(), static_cast<double>(a.counterexamples.size()), 0.0,
                          std::to_string(a.checked) + " instances"});
  }
  doc.results["flavor"] = hopf::to_string(h.flavor());
  doc.results["axioms"] = reports;
  return doc;
}

// ----------------------------------------------------------------- fock

fock::BogoliubovSpec family_spec(const Request& r, const CommandConfig& config, std::size_t d) {
  const double r_default = 0.5 * std::log(2.0);
  if (r.family == "fock") return fock::BogoliubovSpec::fock(d);
  if (r.family == "uniform") return fock::BogoliubovSpec::uniform(d, r.r.value_or(r_default));
  if (r.family == "summable") return fock::BogoliubovSpec::summable(d, r.r.value_or(r_default));
  if (r.family == "generating") {
    if (!config.c) throw ConfigError("--family generating needs --c");
    return fock::BogoliubovSpec::from_generating_parameter(d, *config.c);
  }
  throw ConfigError("unknown family '" + r.family + "' (fock, uniform, summable, generating)");
}

json sparse_json(const fock::SparseOperator& a) {
  json out = json::array();
  for (int k = 0; k < a.outerSize(); ++k) {
    for (fock::SparseOperator::InnerIterator it(a, k); it; ++it) {
      out.push_back({it.row(), it.col(), it.value().real(), it.value().imag()});
    }
  }
  return out;
}

ReportDocument fock_matrices(const CommandConfig& config) {
  ReportDocument doc;
  const fock::ModeSpace m(config.d, config.nmax, config.numeric_gram());
  const fock::Ladder l = fock::ladder_matrices(m);
  json states = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) states.push_back(m.index().state(i));
  json raise = json::array();
  for (const auto& a : l.raise) raise.push_back(sparse_json(a));
  const auto safe = m.safe_indices(2);
  double ccr = 0.0;
  for (std::size_t j = 0; j < m.modes(); ++j) {
    for (std::size_t k = 0; k < m.modes(); ++k) {
      const fock::SparseOperator c = l.lower[j] * l.raise[k] - l.raise[k] * l.lower[j];
      const fock::SparseOperator want = j == k ? m.identity() : fock::SparseOperator(m.dim(), m.dim());
      ccr = std::max(ccr, fock::max_abs_on_columns(c, want, safe));
    }
  }
  double vacuum = 0.0;
  for (const auto& a : l.lower) vacuum = std::max(vacuum, (a * m.vacuum()).cwiseAbs().maxCoeff());
  doc.results = {{"dim", m.dim()}, {"states", states}, {"raise", raise},
                 {"note", "entries are [row, col, re, im]; lowering matrices are the transposes"}};
  doc.check_below("ladder_commutator", ccr, kLadderTolerance, "[a-_j, a+_k] = delta_jk on the safe subspace");
  doc.check_below("vacuum_annihilated", vacuum, kLadderTolerance);
  return doc;
}

ReportDocument fock_spectrum(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const fock::ModeSpace m(config.d, config.nmax, config.numeric_gram());
  const auto rep = fock::number_spectrum(m, family_spec(r, config, config.d), r.eigenvalues, r.family);
  doc.results = {{"family", r.family},
                 {"d", rep.d},
                 {"nmax", rep.nmax},
                 {"lowest", rep.lowest},
                 {"fock_vacuum_expectation", rep.fock_vacuum_expectation}};
  doc.check_below("nonnegative_spectrum", std::max(0.0, -rep.lowest.front()), kSpectrumFloor);
  doc.checks.push_back({"converged", rep.converged, std::nullopt, std::nullopt,
                        "lowest eigenvalue stable against nmax - 2 to 1e-6"});
  return doc;
}

ReportDocument fock_genfun(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const fock::ModeSpace m(config.d, config.nmax, config.numeric_gram());
  const fock::Ladder l = fock::ladder_matrices(m);
  const Eigen::VectorXd v = parse_vector(r.v, config.d);
  const auto spec = family_spec(r, config, config.d);
  const fock::Complex z =
      r.family == "fock" ? fock::vacuum_generating_function(m, l, v) : fock::generating_function(m, l, spec, v);
  const Eigen::VectorXd w = m.orthonormal_coordinates(v);
  const auto gamma = spec.gamma();
  double exponent = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) exponent += gamma[static_cast<std::size_t>(k)] * w(k) * w(k);
  const double expected = std::exp(-0.25 * exponent);
  doc.results = {{"family", r.family}, {"v", vector_json(v)}, {"value", complex_json(z)}, {"expected", expected}};
  doc.check_below("generating_function", std::abs(z - expected), kGenfunTolerance);
  return doc;
}

ReportDocument fock_transfer(const Request& r, const CommandConfig& config) {
  if (!config.q || !config.c) throw ConfigError("fock transfer needs --q and --c");
  ReportDocument doc;
  const fock::ModeSpace m(config.d, config.nmax, config.numeric_gram());
  const fock::Ladder l = fock::ladder_matrices(m);
  const auto rep = fock::transfer_rep(*config.q, *config.c);
  const auto safe = m.safe_indices(2);
  auto rng = rng_for(config, "fock transfer");
  double worst = 0.0;
  for (std::size_t i = 0; i < r.count; ++i) {
    const auto v = random_vector(rng, config.d);
    const auto w = random_vector(rng, config.d);
    const fock::SparseOperator pv = fock::transfer_fields(m, l, rep, v).pi;
    const fock::SparseOperator fw = fock::transfer_fields(m, l, rep, w).phi;
    const fock::SparseOperator c = pv * fw - fw * pv;
    const fock::SparseOperator want = fock::Complex(0.0, -rep.pi_scale * m.inner(v, w)) * m.identity();
    worst = std::max(worst, fock::max_abs_on_columns(c, want, safe));
  }
  doc.results = {{"q", rep.q}, {"c", rep.c}, {"pi_scale", rep.pi_scale}, {"samples", r.count}};
  doc.check_below("transfer_commutator", worst, kTransferTolerance, "[pi_qc(v), phi(w)] = -i C <v|w> 1");
  return doc;
}

ReportDocument fock_trend(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  std::vector<std::size_t> ds;
  for (std::size_t d = 1; d <= config.d; ++d) ds.push_back(d);
  const auto series = fock::boundedness_trend(
      r.family, [&](std::size_t d) { return family_spec(r, config, d); }, ds, config.nmax);
  json rows = json::array();
  bool converged = true;
  double negative = 0.0;
  for (const auto& rep : series.reports) {
    rows.push_back({{"d", rep.d},
                    {"min_eigenvalue", rep.lowest.front()},
                    {"converged", rep.converged},
                    {"fock_vacuum_expectation", rep.fock_vacuum_expectation}});
    converged = converged && rep.converged;
    negative = std::max(negative, -rep.lowest.front());
  }
  doc.results = {{"family", r.family},
                 {"nmax", config.nmax},
                 {"series", rows},
                 {"min_eigenvalue_slope", series.min_eigenvalue_slope},
                 {"vacuum_expectation_slope", series.vacuum_expectation_slope}};
  doc.check_below("nonnegative_spectrum", negative, kSpectrumFloor);
  doc.checks.push_back({"converged", converged, std::nullopt, std::nullopt,
                        "lowest eigenvalues stable against nmax - 2 to 1e-6"});
  return doc;
}

// -------------------------------------------------------------- measure

measure::GaussianModel measure_model(const CommandConfig& config) {
  const Eigen::MatrixXd gram = config.numeric_gram();
  if (config.kmatrix_path.empty()) return measure::GaussianModel::fock(config.d, gram);
  CommandConfig k_config = config;
  k_config.gram_path = config.kmatrix_path;
  const Eigen::MatrixXd k = k_config.numeric_gram();
  if (k.fullPivLu().rank() != k.rows()) throw ConfigError(config.kmatrix_path + ": K is singular");
  return measure::GaussianModel(k, gram);
}

measure::TestFunction random_test_function(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 0.4);
  const auto n = static_cast<Eigen::Index>(d);
  measure::Matrix b(n, n);
  for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = g(rng);
  const measure::Matrix a = 0.5 * (b * b.transpose() + (b * b.transpose()).transpose());
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

ReportDocument measure_cocycle(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const auto m = measure_model(config);
  auto rng = rng_for(config, "measure cocycle");
  double cocycle = 0.0;
  double rn = 0.0;
  for (std::size_t i = 0; i < r.count; ++i) {
    const auto v = random_vector(rng, config.d);
    const auto w = random_vector(rng, config.d);
    const auto u = random_vector(rng, config.d);
    cocycle = std::max(cocycle, measure::cocycle_identity_residual(m, v, w, u));
    rn = std::max(rn, measure::radon_nikodym_residual(m, v, u));
  }
  doc.results = {{"samples", r.count}};
  doc.check_below("cocycle_identity", cocycle, kMeasureTolerance);
  doc.check_below("radon_nikodym", rn, kMeasureTolerance);
  return doc;
}

ReportDocument measure_eta(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const auto m = measure_model(config);
  const auto v = parse_vector(r.v, config.d);
  const auto u = parse_vector(r.u, config.d);
  const auto est = measure::eta(m, v, u);
  const double exact = measure::eta_closed_form(m, v, u);
  doc.results = {{"v", vector_json(v)},
                 {"u", vector_json(u)},
                 {"estimate", est.value},
                 {"error_estimate", est.error_estimate},
                 {"closed_form", exact},
                 {"alphas", est.alphas},
                 {"quotients", est.quotients}};
  doc.check_below("eta_extrapolation", std::abs(est.value - exact), kEtaTolerance);
  return doc;
}

double sigmas(double diff, double stderr) {
  if (stderr > 0.0) return std::abs(diff) / stderr;
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

ReportDocument measure_bochner(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const auto m = measure_model(config);
  const auto v = parse_vector(r.v, config.d);
  const auto mc = measure::bochner_mc(m, v, config.samples, config.seed);
  const double target = m.generating_function(v);
  doc.results = {{"v", vector_json(v)},
                 {"estimate", complex_json(mc.mean)},
                 {"stderr", {{"re", mc.stderr_re}, {"im", mc.stderr_im}}},
                 {"samples", mc.samples},
                 {"target", target}};
  doc.check_below("bochner_real_sigmas", sigmas(mc.mean.real() - target, mc.stderr_re), kSigmaBound);
  doc.check_below("bochner_imag_sigmas", sigmas(mc.mean.imag(), mc.stderr_im), kSigmaBound);
  return doc;
}

measure::RationalVector random_rational_vector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  measure::RationalVector v;
  for (std::size_t k = 0; k < d; ++k) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    v.push_back(x);
  }
  return v;
}

ReportDocument measure_weyl(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const auto m = measure_model(config);
  const measure::FunctionalRep rep(m);
  auto rng = rng_for(config, "measure weyl");
  double residual = 0.0;
  for (std::size_t i = 0; i < r.count; ++i) {
    const auto v = random_vector(rng, config.d);
    const auto w = random_vector(rng, config.d);
    const auto f = random_test_function(rng, config.d);
    residual = std::max(residual, measure::weyl_relation_residual(rep, v, w, f, random_vector(rng, config.d)));
  }
  measure::RationalMatrix gram;
  if (!config.gram_path.empty()) {
    for (const auto& row : read_matrix_file(config.gram_path)) {
      gram.emplace_back();
      for (const auto& e : row) gram.back().push_back(parse_rational(e));
    }
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < r.count; ++i) {
    measure::WeylElement g[3];
    for (auto& x : g) {
      x = measure::weyl_compose(measure::WeylElement::t(random_rational_vector(rng, config.d)),
                                measure::WeylElement::p(random_rational_vector(rng, config.d)), gram);
    }
    const auto left = measure::weyl_compose(measure::weyl_compose(g[0], g[1], gram), g[2], gram);
    const auto right = measure::weyl_compose(g[0], measure::weyl_compose(g[1], g[2], gram), gram);
    if (!(left == right)) ++failures;
  }
  doc.results = {{"samples", r.count}};
  doc.check_below("weyl_relation", residual, kMeasureTolerance, "pointwise on the functional representation");
  doc.checks.push_back({"group_associativity", failures == 0, static_cast<double>(failures), 0.0,
                        "exact rational phases"});
  return doc;
}

ReportDocument measure_pd(const Request& r, const CommandConfig& config) {
  ReportDocument doc;
  const double c = config.c.value_or(std::sqrt(0.5));
  auto rng = rng_for(config, "measure pd-check");
  std::vector<measure::Vector> vectors;
  for (std::size_t i = 0; i < r.count; ++i) vectors.push_back(random_vector(rng, config.d));
  const double min_eig = measure::positive_definiteness_check(measure::z_c(c, config.numeric_gram()), vectors);
  doc.results = {{"c", c}, {"vectors", r.count}, {"min_eigenvalue", min_eig}};
  doc.check_below("positive_definite", std::max(0.0, -min_eig), kMeasureTolerance);
  return doc;
}

ReportDocument selftest(const CommandConfig& config) {
  ReportDocument doc;
  json criteria = json::array();
  for (const auto& c : acceptance::run_all(config.seed)) {
    criteria.push_back(acceptance::to_json(c));
    doc.checks.push_back({"criterion " + std::to_string(c.id) + ": " + c.title, c.pass, std::nullopt, std::nullopt,
                          c.detail});
    if (c.metrics.contains("finding")) doc.findings.push_back(c.metrics["finding"]);
  }
  doc.results = {{"criteria", criteria}};
  return doc;
}

ReportDocument dispatch(const Request& r, const CommandConfig& config) {
  const std::string& c = r.command;
  if (c == "normalize" || c == "commutator" || c == "adjoint" || c == "convert" || c == "coproduct" ||
      c == "counit" || c == "antipode") {
    return algebra_command(r, config);
  }
  if (c == "hopf-check") return hopf_check(config);
  if (c == "selftest") return selftest(config);
  if (c == "fock") {
    if (r.action == "matrices") return fock_matrices(config);
    if (r.action == "spectrum") return fock_spectrum(r, config);
    if (r.action == "genfun") return fock_genfun(r, config);
    if (r.action == "transfer") return fock_transfer(r, config);
    if (r.action == "trend") return fock_trend(r, config);
  }
  if (c == "measure") {
    if (r.action == "cocycle") return measure_cocycle(r, config);
    if (r.action == "eta") return measure_eta(r, config);
    if (r.action == "bochner") return measure_bochner(r, config);
    if (r.action == "weyl") return measure_weyl(r, config);
    if (r.action == "pd-check") return measure_pd(r, config);
  }
  throw ConfigError("unknown command '" + c + (r.action.empty() ? "" : " " + r.action) + "'");
}

}  // namespace

std::vector<std::string> command_echo(int argc, const char* const* argv) {
  std::vector<std::string> out;
  for (int k = 1; k < argc; ++k) out.emplace_back(argv[k]);
  return out;
}

ReportDocument run(const Request& request, const CommandConfig& config) {
  config.validate();
  ReportDocument doc = dispatch(request, config);
  doc.config = config.to_json();
  return doc;
}

}  // namespace ccr::cli
