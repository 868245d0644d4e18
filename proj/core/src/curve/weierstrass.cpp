// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/curve/weierstrass.hpp"

#include <algorithm>

#include "scattering/error.hpp"

namespace scattering {

EllipticCurve WeierstrassTransform::apply(const EllipticCurve& e) const {
  const Rational &a1 = e.a1(), &a2 = e.a2(), &a3 = e.a3(), &a4 = e.a4(), &a6 = e.a6();
  Rational u2 = u * u, u3 = u2 * u;
  Rational n1 = a1 + 2 * s;
  Rational n2 = a2 - s * a1 + 3 * r - s * s;
  Rational n3 = a3 + r * a1 + 2 * t;
  Rational n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
  Rational n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  return EllipticCurve(n1 / u, n2 / u2, n3 / u3, n4 / (u2 * u2), n6 / (u3 * u3));
}

RationalPoint WeierstrassTransform::apply(const RationalPoint& p) const {
  if (p.is_infinity()) return p;
  Rational u2 = u * u;
  Rational x = (p.x() - r) / u2;
  Rational y = (p.y() - s * u2 * x - t) / (u2 * u);
  return {x, y};
}

RationalPoint WeierstrassTransform::pull_back(const RationalPoint& p) const {
  if (p.is_infinity()) return p;
  Rational u2 = u * u;
  return {u2 * p.x() + r, u2 * u * p.y() + s * u2 * p.x() + t};
}

WeierstrassTransform compose(const WeierstrassTransform& a, const WeierstrassTransform& b) {
  Rational u1sq = a.u * a.u;
  return {a.u * b.u, a.r + u1sq * b.r, a.s + a.u * b.s,
          a.t + u1sq * a.u * b.t + a.s * u1sq * b.r};
}

TransformedCurve integral_model(const EllipticCurve& e) {
  // smallest k with k^i a_i integral
  Integer k = 1;
  const int weights[5] = {1, 2, 3, 4, 6};
  auto coeffs = e.coefficients();
  for (int i = 0; i < 5; ++i) {
    Integer d = coeffs[static_cast<std::size_t>(i)].get_den();
    for (const auto& [p, ex] : factor(d)) {
      int need = (ex + weights[i] - 1) / weights[i];
      int have = valuation(k, p);
      for (int j = have; j < need; ++j) k *= p;
    }
  }
  WeierstrassTransform t;
  t.u = Rational(1) / Rational(k);
  return {t.apply(e), t};
}

namespace {

bool kraus_ok(const Integer& c4, const Integer& c6) {
  if (valuation(c6, Integer(3)) == 2) return false;
  Integer m4 = mod(c6, Integer(4));
  if (m4 == 3) return true;
  if (valuation(c4, Integer(2)) < 4) return false;
  Integer m32 = mod(c6, Integer(32));
  return m32 == 0 || m32 == 8;
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

EllipticCurve from_invariants(const Integer& c4, const Integer& c6) {
  Integer b2 = symmetric_mod(-c6, Integer(12));
  Integer b4 = (b2 * b2 - c4) / 24;
  Integer b6 = (-b2 * b2 * b2 + 36 * b2 * b4 - c6) / 216;
  Integer a1 = mod(b2, Integer(2));
  Integer a3 = mod(b6, Integer(2));
  Integer a2 = (b2 - a1) / 4;
  Integer a4 = (b4 - a1 * a3) / 2;
  Integer a6 = (b6 - a3) / 4;
  return EllipticCurve(Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6));
}

// (r, s, t) carrying e to target given u.
WeierstrassTransform solve_isomorphism(const EllipticCurve& e, const EllipticCurve& target,
                                       const Rational& u) {
  WeierstrassTransform w;
  w.u = u;
  w.s = (u * target.a1() - e.a1()) / 2;
  w.r = (u * u * target.a2() - e.a2() + w.s * e.a1() + w.s * w.s) / 3;
  w.t = (u * u * u * target.a3() - e.a3() - w.r * e.a1()) / 2;
  if (w.apply(e) != target) throw Error("curve", "isomorphism to minimal model not found");
  return w;
}

}  // namespace

TransformedCurve minimal_model(const EllipticCurve& e) {
  auto [ei, ti] = integral_model(e);
  Integer c4 = ei.c4().get_num();
  Integer c6 = ei.c6().get_num();
  Integer disc = ei.discriminant().get_num();
  Integer u = 1;
  for (const auto& [p, ex] : factor(disc)) {
    if (ex < 12) continue;
    int e4 = c4 == 0 ? kInfiniteValuation : valuation(c4, p) / 4;
    int e6 = c6 == 0 ? kInfiniteValuation : valuation(c6, p) / 6;
    int d = std::min({e4, e6, ex / 12});
    for (; d > 0; --d) {
      Integer pd;
      mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
      Integer pd4 = pd * pd * pd * pd;
      if (p > 3 || kraus_ok(c4 / pd4, c6 / (pd4 * pd * pd))) break;
    }
    for (int j = 0; j < d; ++j) u *= p;
  }
  Integer u4 = u * u * u * u;
  EllipticCurve target = from_invariants(c4 / u4, c6 / (u4 * u * u));
  WeierstrassTransform w = solve_isomorphism(ei, target, Rational(u));
  // keep the input model untouched when it is already minimal
  if (u == 1) return {ei, ti};
  return {target, compose(ti, w)};
}

bool is_minimal_at(const EllipticCurve& e, const Integer& p) {
  if (!e.is_integral()) return false;
  auto m = minimal_model(e);
  return valuation(m.curve.discriminant(), p) == valuation(e.discriminant(), p);
}

std::vector<Integer> bad_primes(const EllipticCurve& e) {
  return prime_divisors(minimal_model(e).curve.discriminant().get_num());
}

}  // namespace scattering
