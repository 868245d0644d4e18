// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <optional>
#include <string>

#include "scattering/curve/elliptic_curve.hpp"
#include "scattering/curve/local_series.hpp"

namespace scattering {

/// Rational function num(x, y) / den(x, y) on E.
struct BelyiMap {
  BivariatePolynomial numerator;
  BivariatePolynomial denominator;

  /// (y (x - 5) + 16) / 32.
  static BelyiMap default_map();
};

std::string to_string(const BivariatePolynomial& f);

/// Value of beta at p; std::nullopt stands for infinity.
std::optional<Rational> eval_belyi(const EllipticCurve& e, const BelyiMap& beta,
                                   const RationalPoint& p);

/// Local degree of beta at p.
int ramification_index(const EllipticCurve& e, const BelyiMap& beta, const RationalPoint& p);

}  // namespace scattering
