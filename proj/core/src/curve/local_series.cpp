// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/curve/local_series.hpp"

#include <algorithm>

#include "scattering/error.hpp"

namespace scattering {

LaurentSeries LaurentSeries::constant(const Rational& a, int length) {
  return monomial(a, 0, length);
}

LaurentSeries LaurentSeries::monomial(const Rational& a, int exponent, int length) {
  LaurentSeries s;
  s.val = exponent;
  s.c.assign(static_cast<std::size_t>(length), Rational(0));
  if (length > 0) s.c[0] = a;
  s.normalize();
  return s;
}

Rational LaurentSeries::coefficient(int exponent) const {
  if (exponent < val) return 0;
  if (exponent >= precision()) throw InvalidInput("curve", "coefficient beyond series precision");
  return c[static_cast<std::size_t>(exponent - val)];
}

void LaurentSeries::normalize() {
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  val += static_cast<int>(k);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries s;
  int prec = std::min(a.precision(), b.precision());
  s.val = std::min(a.val, b.val);
  s.c.assign(static_cast<std::size_t>(std::max(0, prec - s.val)), Rational(0));
  for (int e = s.val; e < prec; ++e) {
    Rational v = 0;
    if (e >= a.val) v += a.c[static_cast<std::size_t>(e - a.val)];
    if (e >= b.val) v += b.c[static_cast<std::size_t>(e - b.val)];
    s.c[static_cast<std::size_t>(e - s.val)] = v;
  }
  if (s.c.empty()) s.val = prec;
  s.normalize();
  return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries nb = b;
  for (auto& x : nb.c) x = -x;
  return a + nb;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries s;
  if (a.known_zero() || b.known_zero()) {
    s.val = std::min(a.known_zero() ? a.val + b.val : a.val + b.precision(),
                     b.known_zero() ? a.val + b.val : b.val + a.precision());
    return s;
  }
  std::size_t n = std::min(a.c.size(), b.c.size());
  s.val = a.val + b.val;
  s.c.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) s.c[i + j] += a.c[i] * b.c[j];
  s.normalize();
  return s;
}

LaurentSeries inverse(const LaurentSeries& a) {
  if (a.known_zero()) throw InvalidInput("curve", "cannot invert a series with no known term");
  std::size_t n = a.c.size();
  LaurentSeries s;
  s.val = -a.val;
  s.c.assign(n, Rational(0));
  s.c[0] = 1 / a.c[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a.c[j] * s.c[k - j];
    s.c[k] = -acc * s.c[0];
  }
  return s;
}

LaurentSeries power(const LaurentSeries& a, int n) {
  if (n < 0) return power(inverse(a), -n);
  LaurentSeries r = LaurentSeries::constant(1, static_cast<int>(a.c.size()) + 1);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

Rational evaluate(const BivariatePolynomial& f, const Rational& x, const Rational& y) {
  Rational out = 0;
  for (const auto& [ij, c] : f) {
    Rational term = c;
    for (int i = 0; i < ij.first; ++i) term *= x;
    for (int j = 0; j < ij.second; ++j) term *= y;
    out += term;
  }
  return out;
}

namespace {

// F(x, y) on series.
LaurentSeries curve_equation(const EllipticCurve& e, const LaurentSeries& x, const LaurentSeries& y,
                             int length) {
  auto k = [&](const Rational& a) { return LaurentSeries::constant(a, length); };
  return y * y + k(e.a1()) * x * y + k(e.a3()) * y -
         (x * x * x + k(e.a2()) * x * x + k(e.a4()) * x + k(e.a6()));
}

LaurentSeries truncate(LaurentSeries s, int prec) {
  if (s.precision() > prec) s.c.resize(static_cast<std::size_t>(std::max(0, prec - s.val)));
  if (s.c.empty()) s.val = std::min(s.val, prec);
  s.normalize();
  return s;
}

}  // namespace

LocalExpansion local_expansion(const EllipticCurve& e, const RationalPoint& p, int length) {
  if (!e.contains(p)) throw InvalidInput("curve", to_string(p) + " is not on " + to_string(e));
  const int work = length + 4;
  LocalExpansion loc;
  if (p.is_infinity()) {
    // w = -1/y as a series in z = -x/y
    LaurentSeries z = LaurentSeries::monomial(1, 1, work);
    auto k = [&](const Rational& a) { return LaurentSeries::constant(a, work); };
    LaurentSeries w = LaurentSeries::monomial(1, 3, work);
    for (int it = 0; it < work; ++it) {
      LaurentSeries next = z * z * z + k(e.a1()) * z * w + k(e.a2()) * z * z * w +
                           k(e.a3()) * w * w + k(e.a4()) * z * w * w + k(e.a6()) * w * w * w;
      w = truncate(next, work + 3);
    }
    LaurentSeries winv = inverse(w);
    loc.x = truncate(z * winv, length - 2);
    loc.y = truncate(LaurentSeries::constant(-1, work) * winv, length - 3);
    return loc;
  }
  const Rational fx = -(3 * p.x() * p.x() + 2 * e.a2() * p.x() + e.a4() - e.a1() * p.y());
  const Rational fy = 2 * p.y() + e.a1() * p.x() + e.a3();
  LaurentSeries t = LaurentSeries::monomial(1, 1, work);
  if (fy != 0) {
    loc.x = LaurentSeries::constant(p.x(), work) + t;
    loc.y = LaurentSeries::constant(p.y(), work);
    for (int it = 0; it < work; ++it) {
      LaurentSeries f = curve_equation(e, loc.x, loc.y, work);
      loc.y = truncate(loc.y - f * LaurentSeries::constant(1 / fy, work), work);
    }
  } else {
    loc.y = LaurentSeries::constant(p.y(), work) + t;
    loc.x = LaurentSeries::constant(p.x(), work);
    for (int it = 0; it < work; ++it) {
      LaurentSeries f = curve_equation(e, loc.x, loc.y, work);
      loc.x = truncate(loc.x - f * LaurentSeries::constant(1 / fx, work), work);
    }
  }
  loc.x = truncate(loc.x, length);
  loc.y = truncate(loc.y, length);
  return loc;
}

LaurentSeries expand(const BivariatePolynomial& f, const LocalExpansion& loc) {
  int length = std::max<int>(static_cast<int>(loc.x.c.size()), static_cast<int>(loc.y.c.size())) + 2;
  LaurentSeries out;
  out.val = 1 << 20;
  bool first = true;
  for (const auto& [ij, c] : f) {
    LaurentSeries term = LaurentSeries::constant(c, length);
    for (int i = 0; i < ij.first; ++i) term = term * loc.x;
    for (int j = 0; j < ij.second; ++j) term = term * loc.y;
    out = first ? term : out + term;
    first = false;
  }
  return out;
}

int order_at(const EllipticCurve& e, const RationalPoint& p, const BivariatePolynomial& f) {
  for (int length = 12; length <= 192; length *= 2) {
    LaurentSeries s = expand(f, local_expansion(e, p, length));
    if (!s.known_zero()) return s.val;
  }
  throw InvalidInput("curve", "polynomial vanishes identically on the curve near " + to_string(p));
}

}  // namespace scattering
