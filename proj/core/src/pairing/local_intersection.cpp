// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/pairing/local_intersection.hpp"

#include <algorithm>

#include "scattering/error.hpp"

namespace scattering {

int intersection_with_zero(const RationalPoint& r, const Integer& p) {
  if (r.is_infinity()) throw InvalidInput("pairing", "self-intersection of the zero section");
  int v = valuation(r.x(), p);
  return v < 0 ? -v / 2 : 0;
}

namespace {

bool reduces_to_zero(const RationalPoint& pt, const Integer& p) {
  return pt.is_infinity() || valuation(pt.x(), p) < 0;
}

// Chart coordinates near O: z = -x/y, w = -1/y.
std::pair<Rational, Rational> zero_chart(const RationalPoint& pt) {
  if (pt.is_infinity()) return {Rational(0), Rational(0)};
  return {-pt.x() / pt.y(), -1 / pt.y()};
}

int min_valuation(const Rational& a, const Rational& b, const Integer& p) {
  return std::min(valuation(a, p), valuation(b, p));
}

}  // namespace

int local_intersection(const EllipticCurve& e, const RationalPoint& P, const RationalPoint& Q,
                       const Integer& p, int comp_p, int comp_q) {
  if (P == Q) throw InvalidInput("pairing", "local intersection of a section with itself");
  if (comp_p != comp_q) return 0;

  const bool pz = reduces_to_zero(P, p), qz = reduces_to_zero(Q, p);
  if (pz != qz) return 0;
  if (pz) {
    auto [zp, wp] = zero_chart(P);
    auto [zq, wq] = zero_chart(Q);
    return min_valuation(zp - zq, wp - wq, p);
  }

  Rational dx = P.x() - Q.x(), dy = P.y() - Q.y();
  if (valuation(dx, p) < 1 || valuation(dy, p) < 1) return 0;

  // partial derivatives of the Weierstrass equation at the common reduction
  Rational fx = e.a1() * P.y() - (3 * P.x() * P.x() + 2 * e.a2() * P.x() + e.a4());
  Rational fy = 2 * P.y() + e.a1() * P.x() + e.a3();
  bool singular = valuation(fx, p) >= 1 && valuation(fy, p) >= 1;
  if (!singular) return min_valuation(dx, dy, p);
  return intersection_with_zero(add(e, Q, neg(e, P)), p);
}

int local_intersection(const RegularModel& m, const std::string& a, const std::string& b,
                       const Integer& p) {
  return local_intersection(m.curve, m.point(a), m.point(b), p, m.component(p, a), m.component(p, b));
}

int local_intersection(const EllipticCurve& e, const RationalPoint& P, const RationalPoint& Q,
                       const Integer& p) {
  if (P == Q) throw InvalidInput("pairing", "local intersection of a section with itself");
  TateResult r = run_tate(e, p, {P, Q});
  return local_intersection(e, P, Q, p, r.components[0], r.components[1]);
}

std::vector<Integer> meeting_primes(const RationalPoint& P, const RationalPoint& Q) {
  if (P == Q) throw InvalidInput("pairing", "sections coincide");
  Integer g;
  if (P.is_infinity() || Q.is_infinity()) {
    const RationalPoint& r = P.is_infinity() ? Q : P;
    g = r.x().get_den();
  } else {
    Rational dx = P.x() - Q.x(), dy = P.y() - Q.y();
    Integer common = gcd(P.x().get_den(), Q.x().get_den());
    if (dx == 0) {
      g = dy.get_num();
    } else {
      g = gcd(dx.get_num(), dy.get_num());
    }
    g *= common;
  }
  if (g == 0) return {};
  return prime_divisors(g);
}

}  // namespace scattering
