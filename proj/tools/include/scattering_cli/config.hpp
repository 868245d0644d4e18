// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "scattering/curve/belyi.hpp"
#include "scattering/curve/cusp_structure.hpp"
#include "scattering/pairing/finite_pairing.hpp"
#include "scattering_cli/json_io.hpp"

namespace scattering::cli {

enum class OutputFormat { kTable, kJson };

struct RunConfig {
  /// a1, a2, a3, a4, a6.
  std::array<Rational, 5> coefficients;
  RationalPoint generator;
  std::vector<MarkedPoint> cusps;
  BelyiMap beta;
  int degree = 1;
  std::string sigma0;
  std::string sigma1;
  std::vector<DivisorPair> delta_pairs;
  /// 1-based rows of delta_pairs feeding the height formula.
  std::vector<std::size_t> master_rows;
  /// A second choice of rows; the solve must not depend on the choice.
  std::vector<std::size_t> alternative_rows;
  int digits = 20;
  OutputFormat format = OutputFormat::kTable;

  EllipticCurve curve() const;
};

/// The 400H1 data as a JSON document.
const std::string& default_config_text();

/// Parses and validates: the curve must be nonsingular, every point must
/// lie on it, labels must be unique, rows must be in range. Throws
/// InvalidInput on the first problem.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& c);

RunConfig default_config();
RunConfig load_config_file(const std::string& path);

}  // namespace scattering::cli
