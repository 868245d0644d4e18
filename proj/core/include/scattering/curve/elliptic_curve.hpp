// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scattering/exactnum/rational.hpp"

namespace scattering {

/// Point of E(Q): either the point at infinity or an affine pair.
class RationalPoint {
 public:
  RationalPoint() = default;
  RationalPoint(Rational x, Rational y) : affine_(true), x_(std::move(x)), y_(std::move(y)) {}

  static RationalPoint infinity() { return {}; }

  bool is_infinity() const { return !affine_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool operator==(const RationalPoint& o) const {
    return affine_ == o.affine_ && (!affine_ || (x_ == o.x_ && y_ == o.y_));
  }

 private:
  bool affine_ = false;
  Rational x_;
  Rational y_;
};

/// "O" or "(x, y)".
std::string to_string(const RationalPoint& p);

/// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
class EllipticCurve {
 public:
  /// Throws InvalidInput when the discriminant vanishes.
  EllipticCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);

  /// y^2 = x^3 + a x + b.
  static EllipticCurve short_form(const Rational& a, const Rational& b);

  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  std::vector<Rational> coefficients() const { return {a_[0], a_[1], a_[2], a_[3], a_[4]}; }

  Rational b2() const;
  Rational b4() const;
  Rational b6() const;
  Rational b8() const;
  Rational c4() const;
  Rational c6() const;
  Rational discriminant() const;

  bool is_short() const { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0; }
  bool is_integral() const;

  /// y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6).
  Rational evaluate(const Rational& x, const Rational& y) const;
  bool contains(const RationalPoint& p) const;

  bool operator==(const EllipticCurve& o) const { return a_ == o.a_; }

 private:
  std::vector<Rational> a_;
};

/// "[a1,a2,a3,a4,a6]".
std::string to_string(const EllipticCurve& e);

RationalPoint neg(const EllipticCurve& e, const RationalPoint& p);
RationalPoint add(const EllipticCurve& e, const RationalPoint& p, const RationalPoint& q);
RationalPoint scalar_mul(const EllipticCurve& e, long n, const RationalPoint& p);

/// Exact torsion test: kP = O for some 1 <= k <= 12.
bool is_torsion(const EllipticCurve& e, const RationalPoint& p);

/// Smallest |m| <= bound (positive first) with m*g == p.
std::optional<long> discrete_log(const EllipticCurve& e, const RationalPoint& g,
                                 const RationalPoint& p, long bound = 64);

}  // namespace scattering
