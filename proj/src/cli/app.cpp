// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/cli/app.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "ccr/cli/commands.hpp"
#include "ccr/cli/parser.hpp"

namespace ccr::cli {

namespace {

void add_shared_options(CLI::App& app, CommandConfig& c, Request& r) {
  app.add_option("--variant", c.variant, "undeformed, deformed (strict) or collapsed")->capture_default_str();
  app.add_option("--basis", c.basis, "phi-pi or ladder")->capture_default_str();
  app.add_option("--flavor", c.flavor, "Hopf structure: classical or deformed")->capture_default_str();
  app.add_option("--d", c.d, "number of modes")->capture_default_str();
  app.add_option("--nmax", c.nmax, "total occupation cutoff")->capture_default_str();
  app.add_option("--q", c.q, "deformation parameter q");
  app.add_option("--c", c.c, "deformation or generating parameter c");
  app.add_option("-D,--degree", c.degree, "degree bound for axiom checks")->capture_default_str();
  app.add_option("--gram", c.gram_path, "JSON file with the Gram matrix");
  app.add_option("--kmatrix", c.kmatrix_path, "JSON file with the covariance operator K");
  app.add_option("--seed", c.seed, "random seed (CCR_HOPF_SEED overrides)")->capture_default_str();
  app.add_option("--samples", c.samples, "Monte Carlo samples")->capture_default_str();
  app.add_option("-o,--output", c.output_path, "write the report here instead of stdout");
  app.add_option("--format", c.format, "json or text")->capture_default_str();
  app.add_option("--v", r.v, "vector v: one value (times e_0) or d comma-separated values");
  app.add_option("--w", r.w, "vector w");
  app.add_option("--u", r.u, "point u");
  app.add_option("--to", r.to, "target basis for convert")->capture_default_str();
  app.add_option("--family", r.family, "fock, uniform, summable or generating")->capture_default_str();
  app.add_option("--r", r.r, "squeezing parameter (default ln(2)/2)");
  app.add_option("--count", r.count, "random instances for property commands")->capture_default_str();
  app.add_option("--eigenvalues", r.eigenvalues, "eigenvalues reported by fock spectrum")->capture_default_str();
}

void emit(const ReportDocument& doc, const CommandConfig& c, std::ostream& out) {
  const std::string text = c.format == "text" ? doc.to_text() : doc.to_json().dump(2) + "\n";
  if (c.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output_path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + c.output_path);
  file << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig config;
  Request request;
  CLI::App app{"Normal forms, Hopf axiom checks and numerical representations of the canonical commutation relations"};
  app.require_subcommand(1);
  add_shared_options(app, config, request);

  const auto expression_command = [&](const std::string& name, const std::string& help, std::size_t operands) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("expr", request.operands, "expression")->required()->expected(static_cast<int>(operands));
  };
  expression_command("normalize", "normal form of an expression", 1);
  expression_command("commutator", "normal form of [x, y]", 2);
  expression_command("adjoint", "normal form of the adjoint", 1);
  expression_command("convert", "rewrite in the basis given by --to", 1);
  expression_command("coproduct", "reduced coproduct", 1);
  expression_command("counit", "counit of the normal form", 1);
  expression_command("antipode", "antipode", 1);
  app.add_subcommand("hopf-check", "exhaustive axiom checks over a degree window")->fallthrough();
  app.add_subcommand("selftest", "run the acceptance suite")->fallthrough();

  auto* fock = app.add_subcommand("fock", "truncated Fock-space numerics")->fallthrough()->require_subcommand(1);
  for (const char* action : {"matrices", "spectrum", "genfun", "transfer", "trend"}) {
    fock->add_subcommand(action)->fallthrough();
  }
  auto* measure = app.add_subcommand("measure", "Gaussian measure representation")->fallthrough()->require_subcommand(1);
  for (const char* action : {"cocycle", "eta", "bochner", "weyl", "pd-check"}) {
    measure->add_subcommand(action)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  request.command = chosen->get_name();
  if (!chosen->get_subcommands().empty()) request.action = chosen->get_subcommands().front()->get_name();

  ReportDocument doc;
  try {
    config.apply_environment();
    doc = run(request, config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: cannot parse expression: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    doc = ReportDocument{};
    doc.config = config.to_json();
    doc.error = request.command + (request.action.empty() ? "" : " " + request.action) + ": " + e.what();
  }
  doc.command = command_echo(argc, argv);
  try {
    emit(doc, config, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!doc.error.empty()) err << "error: " << doc.error << '\n';
  return doc.pass() ? kExitPass : kExitCheckFailure;
}

}  // namespace ccr::cli
