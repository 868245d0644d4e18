// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/curve/belyi.hpp"

#include "scattering/error.hpp"

namespace scattering {

BelyiMap BelyiMap::default_map() {
  BelyiMap b;
  b.numerator = {{{1, 1}, Rational(1)}, {{0, 1}, Rational(-5)}, {{0, 0}, Rational(16)}};
  b.denominator = {{{0, 0}, Rational(32)}};
  return b;
}

std::string to_string(const BivariatePolynomial& f) {
  std::string out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const auto& [ij, c] = *it;
    if (c == 0) continue;
    std::string mono;
    if (ij.first > 0) mono += ij.first == 1 ? "x" : "x^" + std::to_string(ij.first);
    if (ij.second > 0) {
      if (!mono.empty()) mono += "*";
      mono += ij.second == 1 ? "y" : "y^" + std::to_string(ij.second);
    }
    Rational a = abs(c);
    std::string term = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

BivariatePolynomial combine(const BivariatePolynomial& a, const BivariatePolynomial& b,
                            const Rational& lambda) {
  BivariatePolynomial out = a;
  for (const auto& [ij, c] : b) {
    out[ij] -= lambda * c;
    if (out[ij] == 0) out.erase(ij);
  }
  return out;
}

}  // namespace

std::optional<Rational> eval_belyi(const EllipticCurve& e, const BelyiMap& beta,
                                   const RationalPoint& p) {
  if (!e.contains(p)) throw InvalidInput("curve", to_string(p) + " is not on " + to_string(e));
  if (!p.is_infinity()) {
    Rational d = evaluate(beta.denominator, p.x(), p.y());
    if (d != 0) return evaluate(beta.numerator, p.x(), p.y()) / d;
  }
  int on = order_at(e, p, beta.numerator);
  int od = order_at(e, p, beta.denominator);
  if (on < od) return std::nullopt;
  if (on > od) return Rational(0);
  LocalExpansion loc = local_expansion(e, p, 16);
  LaurentSeries n = expand(beta.numerator, loc);
  LaurentSeries d = expand(beta.denominator, loc);
  return n.c.at(0) / d.c.at(0);
}

int ramification_index(const EllipticCurve& e, const BelyiMap& beta, const RationalPoint& p) {
  auto v = eval_belyi(e, beta, p);
  int od = order_at(e, p, beta.denominator);
  if (!v) return od - order_at(e, p, beta.numerator);
  return order_at(e, p, combine(beta.numerator, beta.denominator, *v)) - od;
}

}  // namespace scattering
