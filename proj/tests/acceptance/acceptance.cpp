// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// One line per acceptance criterion; exit status is nonzero if any fails.

#include <iostream>
#include <map>
#include <string>

#include "scattering_cli/config.hpp"
#include "scattering_cli/golden.hpp"
#include "scattering_cli/pipeline.hpp"

int main() {
  using namespace scattering::cli;
  const std::map<int, std::string> titles = {
      {1, "regular model at 2 and 5"},
      {2, "section components"},
      {3, "local intersections of marked sections"},
      {4, "correction divisor for S1-S4 at 2"},
      {5, "finite pairing table"},
      {6, "canonical height and <D, D'> multiples"},
      {7, "cusp classes, widths and relations"},
      {8, "symbolic scattering table"},
      {9, "numeric scattering constants"},
      {10, "structural properties"}};
  std::vector<Check> checks;
  try {
    FullRun run = run_all(default_config());
    checks = golden_checks(run);
    auto props = property_checks(run);
    checks.insert(checks.end(), props.begin(), props.end());
  } catch (const std::exception& e) {
    std::cout << "FAIL pipeline: " << e.what() << "\n";
    return 1;
  }
  int failed = 0;
  for (const auto& [group, title] : titles) {
    int total = 0, bad = 0;
    std::string first;
    for (const auto& c : checks) {
      if (c.group != group) continue;
      ++total;
      if (!c.passed) {
        if (bad++ == 0) first = c.name + " (" + c.discrepancy + ")";
      }
    }
    bool ok = total > 0 && bad == 0;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << group << ": " << title << " [" << (total - bad) << "/"
              << total << " checks]";
    if (!ok) std::cout << " first failure: " << (total == 0 ? std::string("no checks") : first);
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
