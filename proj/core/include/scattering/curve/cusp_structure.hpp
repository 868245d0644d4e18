// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scattering/curve/belyi.hpp"
#include "scattering/curve/elliptic_curve.hpp"

namespace scattering {

struct MarkedPoint {
  std::string label;
  RationalPoint point;
};

/// The five cusps S0..S4 of the default Belyi pair.
std::vector<MarkedPoint> default_cusps();
/// (1, 4).
RationalPoint default_generator();
/// y^2 = x^3 + 5x + 10.
EllipticCurve default_curve();

struct StructureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CuspStructureReport {
  std::vector<StructureCheck> checks;
  /// label -> m with S = m * generator.
  std::map<std::string, long> multiples;
  /// label -> value of beta (nullopt for infinity).
  std::map<std::string, std::optional<Rational>> values;
  /// label -> ramification index of beta.
  std::map<std::string, int> ramification;

  bool ok() const;
};

/// Checks that every marked point lies on E and over {0, 1, infinity},
/// writes each one as a multiple of the generator, and checks via the
/// group law that the fibres over 0 and 1 are linearly equivalent to the
/// fibre over infinity. Failed checks name the offending point.
CuspStructureReport verify_cusp_structure(const EllipticCurve& e, const BelyiMap& beta,
                                          const RationalPoint& generator,
                                          const std::vector<MarkedPoint>& cusps);

}  // namespace scattering
