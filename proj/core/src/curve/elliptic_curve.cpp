// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/curve/elliptic_curve.hpp"

#include "scattering/error.hpp"

namespace scattering {

std::string to_string(const RationalPoint& p) {
  if (p.is_infinity()) return "O";
  return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

EllipticCurve::EllipticCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  if (discriminant() == 0) throw InvalidInput("curve", "singular curve " + to_string(*this));
}

EllipticCurve EllipticCurve::short_form(const Rational& a, const Rational& b) {
  return EllipticCurve(0, 0, 0, a, b);
}

Rational EllipticCurve::b2() const { return a1() * a1() + 4 * a2(); }
Rational EllipticCurve::b4() const { return 2 * a4() + a1() * a3(); }
Rational EllipticCurve::b6() const { return a3() * a3() + 4 * a6(); }
Rational EllipticCurve::b8() const {
  return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() -
         a4() * a4();
}
Rational EllipticCurve::c4() const { return b2() * b2() - 24 * b4(); }
Rational EllipticCurve::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }

Rational EllipticCurve::discriminant() const {
  Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

bool EllipticCurve::is_integral() const {
  for (const auto& a : a_)
    if (!scattering::is_integer(a)) return false;
  return true;
}

Rational EllipticCurve::evaluate(const Rational& x, const Rational& y) const {
  return y * y + a1() * x * y + a3() * y - (((x + a2()) * x + a4()) * x + a6());
}

bool EllipticCurve::contains(const RationalPoint& p) const {
  return p.is_infinity() || evaluate(p.x(), p.y()) == 0;
}

std::string to_string(const EllipticCurve& e) {
  std::string out = "[";
  auto c = e.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + to_string(c[i]);
  return out + "]";
}

RationalPoint neg(const EllipticCurve& e, const RationalPoint& p) {
  if (p.is_infinity()) return p;
  return {p.x(), -p.y() - e.a1() * p.x() - e.a3()};
}

RationalPoint add(const EllipticCurve& e, const RationalPoint& p, const RationalPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational lambda, nu;
  if (p.x() == q.x()) {
    Rational denom = 2 * p.y() + e.a1() * p.x() + e.a3();
    if (p.y() != q.y() || denom == 0) return RationalPoint::infinity();
    lambda = (3 * p.x() * p.x() + 2 * e.a2() * p.x() + e.a4() - e.a1() * p.y()) / denom;
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  nu = p.y() - lambda * p.x();
  Rational x3 = lambda * lambda + e.a1() * lambda - e.a2() - p.x() - q.x();
  Rational y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
  return {x3, y3};
}

RationalPoint scalar_mul(const EllipticCurve& e, long n, const RationalPoint& p) {
  RationalPoint base = n < 0 ? neg(e, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  RationalPoint acc;
  while (k != 0) {
    if (k & 1UL) acc = add(e, acc, base);
    base = add(e, base, base);
    k >>= 1;
  }
  return acc;
}

bool is_torsion(const EllipticCurve& e, const RationalPoint& p) {
  RationalPoint q = p;
  for (int k = 1; k <= 12; ++k) {
    if (q.is_infinity()) return true;
    q = add(e, q, p);
  }
  return false;
}

std::optional<long> discrete_log(const EllipticCurve& e, const RationalPoint& g,
                                 const RationalPoint& p, long bound) {
  if (p.is_infinity()) return 0;
  RationalPoint pos = g;
  RationalPoint ng = neg(e, g);
  RationalPoint negm = ng;
  for (long m = 1; m <= bound; ++m) {
    if (pos == p) return m;
    if (negm == p) return -m;
    pos = add(e, pos, g);
    negm = add(e, negm, ng);
  }
  return std::nullopt;
}

}  // namespace scattering
