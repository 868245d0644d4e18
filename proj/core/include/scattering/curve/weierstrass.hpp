// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <vector>

#include "scattering/curve/elliptic_curve.hpp"

namespace scattering {

/// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t taking a
/// model E to a model E'.
struct WeierstrassTransform {
  Rational u = 1;
  Rational r = 0;
  Rational s = 0;
  Rational t = 0;

  static WeierstrassTransform identity() { return {}; }

  EllipticCurve apply(const EllipticCurve& e) const;
  RationalPoint apply(const RationalPoint& p) const;
  /// Point of E' back to E.
  RationalPoint pull_back(const RationalPoint& p) const;

  bool operator==(const WeierstrassTransform&) const = default;
};

/// First apply a, then b.
WeierstrassTransform compose(const WeierstrassTransform& a, const WeierstrassTransform& b);

struct TransformedCurve {
  EllipticCurve curve;
  WeierstrassTransform transform;
};

/// Integral model obtained by a scaling u = 1/k with k minimal.
TransformedCurve integral_model(const EllipticCurve& e);

/// Global minimal model (Kraus conditions at 2 and 3), composed with the
/// integralising scaling.
TransformedCurve minimal_model(const EllipticCurve& e);

bool is_minimal_at(const EllipticCurve& e, const Integer& p);

/// Primes dividing the minimal discriminant.
std::vector<Integer> bad_primes(const EllipticCurve& e);

}  // namespace scattering
