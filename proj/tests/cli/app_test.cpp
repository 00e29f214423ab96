// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/cli/app.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ccr/cli/report.hpp"
#include "json.hpp"

using namespace ccr::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  [[nodiscard]] json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ccr-hopf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(CliTest, NormalizeDeformed) {
  const Outcome o = invoke({"normalize", "pi(0)*phi(0)", "--variant", "deformed"});
  ASSERT_EQ(o.code, kExitPass) << o.err;
  const json r = o.report();
  EXPECT_EQ(r["results"]["normal_form"]["text"], "-i*kappa*I + phi(0)*pi(0)");
  EXPECT_EQ(r["command"], (json{"normalize", "pi(0)*phi(0)", "--variant", "deformed"}));
  EXPECT_EQ(r["config"]["variant"], "deformed");
  EXPECT_EQ(r["summary"]["status"], "pass");
}

TEST(CliTest, NormalizeNumericMode) {
  const Outcome o = invoke({"normalize", "pi(0)*phi(0)", "--variant", "deformed", "--q", "2", "--c", "0.5"});
  ASSERT_EQ(o.code, kExitPass) << o.err;
  const json terms = o.report()["results"]["normal_form_numeric"]["terms"];
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_TRUE(terms[0]["coefficient"]["im"].is_number_float());
}

TEST(CliTest, HopfCheckClassicalAllPass) {
  const Outcome o = invoke({"hopf-check", "--flavor", "classical", "--degree", "3"});
  ASSERT_EQ(o.code, kExitPass) << o.out;
  const json r = o.report();
  EXPECT_GE(r["checks"].size(), 4u);
  for (const auto& c : r["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(CliTest, HopfCheckDeformedReportsWitnessAsFinding) {
  const Outcome o = invoke({"hopf-check", "--flavor", "deformed", "--variant", "deformed", "-D", "2"});
  EXPECT_EQ(o.code, kExitPass);
  const json r = o.report();
  bool witness = false;
  for (const auto& f : r["findings"]) witness = witness || f["axiom"] == "cocommutativity";
  EXPECT_TRUE(witness);
}

TEST(CliTest, FockGenfun) {
  const Outcome o = invoke({"fock", "genfun", "--d", "1", "--nmax", "20", "--v", "1.0"});
  ASSERT_EQ(o.code, kExitPass) << o.err;
  const json r = o.report();
  EXPECT_NEAR(r["results"]["value"]["re"].get<double>(), std::exp(-0.25), 1e-8);
  EXPECT_EQ(r["checks"][0]["tolerance"], 1e-8);
}

TEST(CliTest, AlgebraCommands) {
  EXPECT_EQ(invoke({"commutator", "ap(0)", "am(0)"}).report()["results"]["commutator"]["text"], "-I");
  EXPECT_EQ(invoke({"adjoint", "i*ap(1)"}).report()["results"]["adjoint"]["text"], "-i*am(1)");
  EXPECT_EQ(invoke({"counit", "3*I + phi(0)"}).report()["results"]["counit"]["re"], "0");
  const json cop = invoke({"coproduct", "phi(0)"}).report()["results"]["coproduct"];
  EXPECT_EQ(cop["order"], 2);
  EXPECT_EQ(cop["terms"].size(), 2u);
  const json conv = invoke({"convert", "phi(0)", "--to", "ladder"}).report()["results"]["converted"];
  EXPECT_EQ(conv["terms"].size(), 2u);
}

TEST(CliTest, PropertyCommandsPass) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"fock", "matrices", "--nmax", "4"},
           {"fock", "transfer", "--q", "1.5", "--c", "0.7"},
           {"fock", "spectrum", "--family", "uniform", "--nmax", "8"},
           {"fock", "trend", "--family", "summable", "--d", "2", "--nmax", "8"},
           {"measure", "cocycle"},
           {"measure", "eta", "--v", "1,2", "--u", "0.5,-1"},
           {"measure", "bochner", "--samples", "20000"},
           {"measure", "weyl"},
           {"measure", "pd-check", "--c", "0.8"}}) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, kExitPass) << args[0] << " " << args[1] << "\n" << o.out << o.err;
  }
}

TEST(CliExitTest, CheckFailureIsOne) {
  // Truncation at nmax 2 is far from exp(-9/4).
  const Outcome o = invoke({"fock", "genfun", "--d", "1", "--nmax", "2", "--v", "3"});
  EXPECT_EQ(o.code, kExitCheckFailure);
  EXPECT_EQ(o.report()["summary"]["status"], "fail");
}

TEST(CliExitTest, DownstreamErrorIsOneWithContext) {
  const Outcome o = invoke({"coproduct", "phi(0)", "--flavor", "deformed"});
  EXPECT_EQ(o.code, kExitCheckFailure);
  const json r = o.report();
  EXPECT_EQ(r["summary"]["status"], "error");
  EXPECT_NE(r["error"].get<std::string>().find("coproduct"), std::string::npos);
}

TEST(CliExitTest, UsageErrorsAreTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"normalize"}).code, kExitUsage);
  EXPECT_EQ(invoke({"normalize", "phi(0)", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"normalize", "phi(0) +"}).code, kExitUsage);
  EXPECT_EQ(invoke({"normalize", "K"}).code, kExitUsage);
  EXPECT_EQ(invoke({"normalize", "phi(0)", "--variant", "twisted"}).code, kExitUsage);
  EXPECT_EQ(invoke({"fock", "genfun", "--nmax", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"fock", "transfer"}).code, kExitUsage);
  EXPECT_EQ(invoke({"fock", "genfun", "--v", "1,2,3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"fock", "genfun", "--gram", "/nonexistent/gram.json"}).code, kExitUsage);
  EXPECT_EQ(invoke({"measure"}).code, kExitUsage);
}

TEST(CliExitTest, ParseErrorNamesColumn) {
  const Outcome o = invoke({"normalize", "phi(0) * * pi(0)"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("column 9"), std::string::npos) << o.err;
}

TEST(CliTest, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitPass); }

TEST(CliConfigTest, GramFile) {
  const std::string gram = write_temp("gram.json", R"([["2", "1/2"], [0.5, 1]])");
  const Outcome o = invoke({"commutator", "pi(0)", "phi(1)", "--gram", gram});
  ASSERT_EQ(o.code, kExitPass) << o.err;
  EXPECT_EQ(o.report()["results"]["commutator"]["text"], "-1/2*i*I");
  EXPECT_EQ(invoke({"fock", "genfun", "--gram", gram, "--v", "1,1", "--nmax", "20"}).code, kExitPass);
  const std::string bad = write_temp("bad_gram.json", R"([[1, 2], [2, 1]])");
  EXPECT_EQ(invoke({"fock", "genfun", "--gram", bad}).code, kExitUsage);
  const std::string ragged = write_temp("ragged.json", R"([[1, 0], [0]])");
  EXPECT_EQ(invoke({"normalize", "phi(0)", "--gram", ragged}).code, kExitUsage);
}

TEST(CliConfigTest, OutputFileAndTextFormat) {
  const std::string path = testing::TempDir() + "report.json";
  const Outcome o = invoke({"measure", "eta", "--output", path});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const json r = json::parse(in);
  EXPECT_EQ(ReportDocument::from_json(r).to_json(), r);

  const Outcome text = invoke({"measure", "eta", "--format", "text"});
  EXPECT_NE(text.out.find("PASS eta_extrapolation"), std::string::npos);
  EXPECT_NE(text.out.find("status: pass"), std::string::npos);
}

TEST(CliDeterminismTest, SameSeedSameBytes) {
  const std::vector<std::string> args{"measure", "bochner", "--samples", "5000", "--seed", "9"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> other{"measure", "bochner", "--samples", "5000", "--seed", "10"};
  EXPECT_NE(invoke(args).report()["results"], invoke(other).report()["results"]);
}

TEST(CliDeterminismTest, EnvironmentSeedOverrides) {
  const std::vector<std::string> args{"measure", "bochner", "--samples", "5000", "--seed", "9"};
  const json base = invoke(args).report();
  ::setenv("CCR_HOPF_SEED", "123", 1);
  const json overridden = invoke(args).report();
  ::setenv("CCR_HOPF_SEED", "12x", 1);
  const int bad = invoke(args).code;
  ::unsetenv("CCR_HOPF_SEED");
  EXPECT_EQ(overridden["config"]["seed"], 123);
  EXPECT_NE(overridden["results"], base["results"]);
  EXPECT_EQ(bad, kExitUsage);
}
