// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scattering/curve/elliptic_curve.hpp"

namespace scattering {

/// Truncated Laurent series sum c[i] t^(val + i), known up to t^(val + c.size()).
/// Leading zeros are stripped, so a non-empty series has c[0] != 0 unless
/// every known coefficient vanishes (then c is empty and val is the
/// precision bound).
struct LaurentSeries {
  int val = 0;
  std::vector<Rational> c;

  static LaurentSeries constant(const Rational& a, int length);
  static LaurentSeries monomial(const Rational& a, int exponent, int length);

  int precision() const { return val + static_cast<int>(c.size()); }
  bool known_zero() const { return c.empty(); }
  Rational coefficient(int exponent) const;
  void normalize();
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries inverse(const LaurentSeries& a);
LaurentSeries power(const LaurentSeries& a, int n);

/// Polynomial in x and y with rational coefficients, keyed by (i, j) for x^i y^j.
using BivariatePolynomial = std::map<std::pair<int, int>, Rational>;

Rational evaluate(const BivariatePolynomial& f, const Rational& x, const Rational& y);

/// Expansions of x and y in a uniformiser at a point of E: x - x0 when
/// the tangent is not vertical, y - y0 at the 2-torsion points, -x/y at O.
struct LocalExpansion {
  LaurentSeries x;
  LaurentSeries y;
};

LocalExpansion local_expansion(const EllipticCurve& e, const RationalPoint& p, int length);

LaurentSeries expand(const BivariatePolynomial& f, const LocalExpansion& loc);

/// Order of vanishing of f restricted to E at p. Throws InvalidInput if f
/// vanishes identically on E.
int order_at(const EllipticCurve& e, const RationalPoint& p, const BivariatePolynomial& f);

}  // namespace scattering
