// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <vector>

#include "scattering/model/tate.hpp"

namespace scattering {

/// Minimal regular model data at every bad prime, with the marked sections.
/// The curve must already be integral and minimal.
struct RegularModel {
  EllipticCurve curve;
  std::vector<MarkedPoint> sections;
  std::map<Integer, FiberConfiguration> fibers;
  std::map<Integer, SectionComponentMap> section_maps;

  /// Fibre at p; the irreducible I0 layout for good primes.
  FiberConfiguration fiber(const Integer& p) const;
  /// Component met by a section at p (1 for good primes).
  int component(const Integer& p, const std::string& label) const;
  const RationalPoint& point(const std::string& label) const;
  std::vector<Integer> bad_primes() const;
};

RegularModel build_regular_model(const EllipticCurve& e, const std::vector<MarkedPoint>& sections);

/// Same model with the components at p renamed by new_ids (by position).
RegularModel relabel(const RegularModel& m, const Integer& p, const std::vector<int>& new_ids);

}  // namespace scattering
