// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccr/cli/report.hpp"

#include <sstream>

namespace ccr::cli {

using nlohmann::json;

namespace {

json word_json(const Word& w) {
  json out = json::array();
  for (const auto& g : w) out.push_back(g.to_string());
  return out;
}

json check_json(const Check& c) {
  json out = {{"name", c.name}, {"pass", c.pass}};
  if (c.value) out["value"] = *c.value;
  if (c.tolerance) out["tolerance"] = *c.tolerance;
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

Check check_from_json(const json& j) {
  Check c;
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  if (j.contains("value")) c.value = j.at("value").get<double>();
  if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
  if (j.contains("detail")) c.detail = j.at("detail").get<std::string>();
  return c;
}

std::string status(const ReportDocument& r) {
  if (!r.error.empty()) return "error";
  return r.pass() ? "pass" : "fail";
}

}  // namespace

bool ReportDocument::pass() const {
  if (!error.empty()) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void ReportDocument::check_below(const std::string& name, double value, double tolerance, const std::string& detail) {
  checks.push_back({name, value <= tolerance, value, tolerance, detail});
}

json ReportDocument::to_json() const {
  json checks_json = json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    checks_json.push_back(check_json(c));
    if (!c.pass) ++failed;
  }
  json out = {{"command", command}, {"config", config}, {"results", results}, {"checks", checks_json},
              {"findings", findings}};
  if (!error.empty()) out["error"] = error;
  out["summary"] = {{"status", status(*this)},
                    {"checks", checks.size()},
                    {"failed", failed},
                    {"findings", findings.size()}};
  return out;
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument r;
  r.command = j.at("command").get<std::vector<std::string>>();
  r.config = j.at("config");
  r.results = j.at("results");
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  r.findings = j.at("findings");
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  os << "command:";
  for (const auto& a : command) os << ' ' << a;
  os << '\n';
  if (!error.empty()) os << "error: " << error << '\n';
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.value) os << "  value=" << *c.value;
    if (c.tolerance) os << " tolerance=" << *c.tolerance;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  for (const auto& f : findings) os << "finding: " << (f.is_string() ? f.get<std::string>() : f.dump()) << '\n';
  os << "results: " << results.dump(2) << '\n';
  os << "status: " << status(*this) << '\n';
  return os.str();
}

json scalar_json(const Scalar& s) { return {{"re", s.real_part().to_string()}, {"im", s.imag_part().to_string()}}; }

json expr_json(const Expr& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"word", word_json(w)}, {"coefficient", scalar_json(c)}});
  return {{"text", e.to_string()}, {"terms", terms}};
}

json numeric_expr_json(const Expr& e, const Assignment& values) {
  json terms = json::array();
  for (const auto& [w, c] : evaluate_numeric(e, values).terms) {
    terms.push_back({{"word", word_json(w)}, {"coefficient", {{"re", c.real()}, {"im", c.imag()}}}});
  }
  return {{"text", e.to_string()}, {"terms", terms}};
}

json tensor_json(const hopf::TensorExpr& t) {
  json terms = json::array();
  for (const auto& [tw, c] : t.terms()) {
    json factors = json::array();
    for (const auto& w : tw) factors.push_back(word_json(w));
    terms.push_back({{"factors", factors}, {"coefficient", scalar_json(c)}});
  }
  return {{"text", t.to_string()}, {"order", t.order()}, {"terms", terms}};
}

json axiom_json(const hopf::AxiomReport& a) {
  json ce = json::array();
  for (const auto& c : a.counterexamples) {
    ce.push_back({{"subject", c.subject}, {"map", c.map}, {"residual", c.residual_string()}});
  }
  json out = {{"axiom", a.axiom}, {"degree", a.degree}, {"checked", a.checked}, {"pass", a.pass()},
              {"counterexamples", ce}};
  out["notes"] = a.notes;
  return out;
}

}  // namespace ccr::cli
