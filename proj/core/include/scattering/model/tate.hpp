// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "scattering/curve/cusp_structure.hpp"
#include "scattering/curve/elliptic_curve.hpp"
#include "scattering/model/fiber.hpp"

namespace scattering {

/// Component of the special fibre met by the closure of each marked point.
struct SectionComponentMap {
  Integer prime = 0;
  std::map<std::string, int> components;

  int at(const std::string& label) const;
  bool operator==(const SectionComponentMap&) const = default;
};

struct TateResult {
  FiberConfiguration fiber;
  /// One component id per input point, in input order.
  std::vector<int> components;
};

/// Tate's algorithm at p on an integral model, following every coordinate
/// change through the given points. Throws NonMinimalModel when the model
/// is not minimal at p and Unsupported for residue fields too large for the
/// root search.
TateResult run_tate(const EllipticCurve& e, const Integer& p,
                    const std::vector<RationalPoint>& points = {});

FiberConfiguration tate_fiber(const EllipticCurve& e, const Integer& p);

SectionComponentMap section_components(const EllipticCurve& e, const Integer& p,
                                       const std::vector<MarkedPoint>& points);

/// Relabels component ids with the same map used for relabel(fiber, ids).
SectionComponentMap relabel(const SectionComponentMap& m, const FiberConfiguration& original,
                            const std::vector<int>& new_ids);

/// Roots in [0, p) of the polynomial with coefficients listed from the
/// constant term up, ascending.
std::vector<Integer> roots_mod_p(const std::vector<Integer>& coeffs, const Integer& p);

}  // namespace scattering
