// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <string>
#include <vector>

#include "scattering_cli/pipeline.hpp"

namespace scattering::cli {

struct Check {
  /// Acceptance group, 1..10.
  int group = 0;
  std::string name;
  bool passed = false;
  /// "0" for exact matches, otherwise a magnitude or a description of the
  /// mismatch.
  std::string discrepancy;
};

/// Reference data for the 400H1 pair, compared entry by entry against a
/// full run. Groups 1-9; group 10 is property_checks.
std::vector<Check> golden_checks(const FullRun& run);

/// Structural properties: pairing symmetry and bilinearity, numerical
/// triviality of every fibre, relabelling invariance, group-law axioms on
/// seeded random points.
std::vector<Check> property_checks(const FullRun& run, unsigned seed = 20260401);

Json checks_to_json(const std::vector<Check>& checks);
std::vector<Check> checks_from_json(const Json& j);

}  // namespace scattering::cli
