// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/height/canonical_height.hpp"

#include <cmath>

#include "scattering/curve/weierstrass.hpp"
#include "scattering/error.hpp"
#include "scattering/model/tate.hpp"

namespace scattering {

namespace {

double to_double(const Rational& q) { return q.get_d(); }

// Lower bound on the smallest real root of 4x^3 + b2 x^2 + 2 b4 x + b6.
double smallest_two_torsion_x(const EllipticCurve& e) {
  const double c2 = to_double(e.b2()), c1 = 2 * to_double(e.b4()), c0 = to_double(e.b6());
  auto f = [&](double x) { return ((4 * x + c2) * x + c1) * x + c0; };
  const double bound = 1 + std::max({std::fabs(c2), std::fabs(c1), std::fabs(c0)}) / 4;
  double lo = -bound, hi = bound;
  // critical points of f
  const double disc = 4 * c2 * c2 - 48 * c1;
  if (disc > 0) {
    const double cmax = (-2 * c2 - std::sqrt(disc)) / 24;
    const double cmin = (-2 * c2 + std::sqrt(disc)) / 24;
    const double fm = f(cmax);
    if (fm == 0) return cmax;
    (fm > 0 ? hi : lo) = fm > 0 ? cmax : cmin;
  }
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

Real archimedean_local_height(const EllipticCurve& e, const RationalPoint& pt,
                              const PrecisionContext& ctx) {
  if (pt.is_infinity()) throw InvalidInput("height", "local height at O is undefined");
  const Rational r = Rational(static_cast<long>(std::floor(smallest_two_torsion_x(e))) - 1);
  const Rational b2 = e.b2(), b4 = e.b4(), b6 = e.b6(), b8 = e.b8();
  const Real B2 = from_rational(b2 + 12 * r);
  const Real B4 = from_rational(b4 + r * b2 + 6 * r * r);
  const Real B6 = from_rational(b6 + 2 * r * b4 + r * r * b2 + 4 * r * r * r);
  const Real B8 =
      from_rational(b8 + 3 * r * b6 + 3 * r * r * b4 + r * r * r * b2 + 3 * r * r * r * r);

  Rational xs = pt.x() - r;
  if (xs <= 0) throw Error("height", "x-shift failed to make " + to_string(pt) + " positive");
  Real t = from_rational(1 / xs);
  Real lambda = -log(t) / 2;
  const Real target = ctx.epsilon() / 1000;
  const Real zmax = 1 + abs(B4) + 2 * abs(B6) + abs(B8);
  Real weight = Real(1) / 8;
  for (int n = 0; n < 4000; ++n) {
    Real t2 = t * t;
    Real z = 1 - B4 * t2 - 2 * B6 * t2 * t - B8 * t2 * t2;
    Real w = 4 * t + B2 * t2 + 2 * B4 * t2 * t + B6 * t2 * t2;
    if (z <= 0) throw Error("height", "Tate series left its domain at " + to_string(pt));
    Real term = weight * log(z);
    lambda += term;
    // remaining terms are bounded by weight/3 * (log zmax + |log z_min|)
    if (weight * (abs(log(z)) + log(zmax) + 1) < target) return lambda;
    t = w / z;
    weight /= 4;
  }
  int achieved = static_cast<int>(-log10(weight * (log(zmax) + 1)).convert_to<double>());
  throw PrecisionError("height", "Tate series did not reach 10^-" + std::to_string(ctx.digits()),
                       achieved);
}

Rational component_correction(const FiberConfiguration& fiber, int id) {
  using F = KodairaType::Family;
  if (id == fiber.identity_id) return 0;
  const int n = fiber.type.n;
  switch (fiber.type.family) {
    case F::kI: {
      int k = id - 1;
      return make_rational(-k * (n - k), n);
    }
    case F::kIII:
      return Rational(-1, 2);
    case F::kIV:
      return Rational(-2, 3);
    case F::kIStar:
      if (n == 0) return -1;
      if (id == 2) return -1;
      if (id == n + 4 || id == n + 5) return make_rational(-(n + 4), 4);
      break;
    case F::kIVStar:
      if (id == 5 || id == 7) return Rational(-4, 3);
      break;
    case F::kIIIStar:
      if (id == 7) return Rational(-3, 2);
      break;
    default:
      break;
  }
  throw InvalidInput("height", "no section can meet C" + std::to_string(id) + " of a " +
                                   to_string(fiber.type) + " fibre");
}

HeightValue canonical_height(const EllipticCurve& e, const RationalPoint& pt,
                             const PrecisionContext& ctx) {
  if (!e.contains(pt)) throw InvalidInput("height", to_string(pt) + " is not on " + to_string(e));
  HeightValue out{Real(0), ctx.digits()};
  if (pt.is_infinity() || is_torsion(e, pt)) return out;

  TransformedCurve m = minimal_model(e);
  RationalPoint q = m.transform.apply(pt);
  const PrecisionContext work = ctx.raised(5);
  Real h = 2 * archimedean_local_height(m.curve, q, work);
  h += log(from_rational(Rational(q.x().get_den())));
  for (const auto& p : prime_divisors(m.curve.discriminant().get_num())) {
    TateResult r = run_tate(m.curve, p, {q});
    Rational c = component_correction(r.fiber, r.components[0]);
    if (c != 0) h += from_rational(c) * log(Real(p.get_str()));
  }
  out.value = h;
  return out;
}

long nt_pairing(const CuspidalDivisor& d, const CuspidalDivisor& dp,
                const std::map<std::string, long>& multiples) {
  if (d.degree() != 0 || dp.degree() != 0) {
    throw InvalidInput("height", "height pairing needs degree-0 divisors");
  }
  auto m = [&](const std::string& label) {
    auto it = multiples.find(label);
    if (it == multiples.end()) {
      throw InvalidInput("height", label + " is not a known multiple of the generator");
    }
    return it->second;
  };
  long n = 0;
  for (const auto& [a, ca] : d.coeffs())
    for (const auto& [b, cb] : dp.coeffs()) n += ca * cb * m(a) * m(b);
  return n;
}

}  // namespace scattering
