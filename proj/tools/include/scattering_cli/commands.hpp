// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scattering_cli/golden.hpp"
#include "scattering_cli/pipeline.hpp"

namespace scattering::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// Report documents, one per subcommand. Each is a pure function of the run
// so output is byte-stable for a fixed configuration and precision.
Json model_report(const Prepared& p, const RegularModel& m);
Json pairing_report(const PairingStage& s);
Json heights_report(const Prepared& p, const HeightStage& s, int digits);
Json cusps_report(const CuspStage& s);
Json scattering_report(const SolverStage& s, int digits);
Json verify_report(const std::vector<Check>& checks);

/// Entry point shared by main() and the tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scattering::cli
