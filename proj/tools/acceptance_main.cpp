// Copyright 2026 The ccr-hopf Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "ccr/acceptance/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ccr-hopf acceptance suite"};
  int criterion = 0;
  std::uint64_t seed = 42;
  bool json = false;
  app.add_option("--criterion", criterion, "run only this criterion (1-13)")
      ->check(CLI::Range(1, ccr::acceptance::kCriterionCount));
  app.add_option("--seed", seed, "suite seed");
  app.add_flag("--json", json, "print full JSON results after the summary lines");
  CLI11_PARSE(app, argc, argv);

  std::vector<ccr::acceptance::CriterionResult> results;
  try {
    if (criterion > 0) {
      results.push_back(ccr::acceptance::run_criterion(criterion, seed));
    } else {
      results = ccr::acceptance::run_all(seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %2d: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
    if (!r.pass) ++failed;
  }
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results) out.push_back(ccr::acceptance::to_json(r));
    std::cout << out.dump(2) << '\n';
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
