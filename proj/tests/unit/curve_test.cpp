// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <random>

#include "scattering/curve/belyi.hpp"
#include "scattering/curve/cusp_structure.hpp"
#include "scattering/curve/elliptic_curve.hpp"
#include "scattering/curve/local_series.hpp"
#include "scattering/curve/weierstrass.hpp"
#include "scattering/error.hpp"

namespace scattering {
namespace {

TEST(EllipticCurve, Invariants) {
  EllipticCurve e = default_curve();
  EXPECT_EQ(e.discriminant(), -51200);
  EXPECT_EQ(e.c4(), -240);
  EXPECT_EQ(e.c6(), -8640);
  EXPECT_EQ(to_string(e), "[0,0,0,5,10]");
  EllipticCurve e37(0, 0, 1, -1, 0);
  EXPECT_EQ(e37.discriminant(), 37);
  EXPECT_THROW(EllipticCurve::short_form(0, 0), InvalidInput);
  EXPECT_THROW(EllipticCurve::short_form(-3, 2), InvalidInput);
}

TEST(EllipticCurve, MultiplesOfTheGenerator) {
  EllipticCurve e = default_curve();
  RationalPoint g = default_generator();
  EXPECT_EQ(scalar_mul(e, 2, g), RationalPoint(-1, -2));
  EXPECT_EQ(scalar_mul(e, 4, g), RationalPoint(6, 16));
  EXPECT_EQ(scalar_mul(e, -4, g), RationalPoint(6, -16));
  EXPECT_EQ(scalar_mul(e, 8, g), RationalPoint(make_rational(481, 1024), make_rational(115631, 32768)));
  EXPECT_EQ(scalar_mul(e, 0, g), RationalPoint());
  EXPECT_FALSE(is_torsion(e, g));
  EXPECT_EQ(discrete_log(e, g, RationalPoint(6, -16)), -4);
  EXPECT_EQ(discrete_log(e, g, RationalPoint()), 0);
}

TEST(EllipticCurve, TorsionOn11a1) {
  EllipticCurve e(0, -1, 1, -10, -20);
  RationalPoint p(5, 5);
  EXPECT_TRUE(is_torsion(e, p));
  EXPECT_TRUE(scalar_mul(e, 5, p).is_infinity());
  EXPECT_FALSE(scalar_mul(e, 2, p).is_infinity());
}

TEST(EllipticCurve, GroupLawOnRandomPoints) {
  // Rank two, so sums of random multiples of both generators exercise every
  // branch of the addition formula.
  EllipticCurve e(0, 1, 1, -2, 0);
  RationalPoint p(-1, 1), q(0, 0);
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  auto pt = [&] { return add(e, scalar_mul(e, d(rng), p), scalar_mul(e, d(rng), q)); };
  for (int t = 0; t < 40; ++t) {
    RationalPoint a = pt(), b = pt(), c = pt();
    ASSERT_TRUE(e.contains(a));
    EXPECT_EQ(add(e, a, b), add(e, b, a));
    EXPECT_EQ(add(e, add(e, a, b), c), add(e, a, add(e, b, c)));
    EXPECT_TRUE(add(e, a, neg(e, a)).is_infinity());
    EXPECT_EQ(add(e, a, RationalPoint()), a);
    EXPECT_EQ(scalar_mul(e, -3, a), neg(e, scalar_mul(e, 3, a)));
  }
}

TEST(Weierstrass, MinimalModelOfAScaledCurve) {
  // [0,0,0,5,10] scaled by u = 1/2 and shifted.
  EllipticCurve base = default_curve();
  WeierstrassTransform w{make_rational(1, 2), 3, 1, -2};
  EllipticCurve big = w.apply(base);
  EXPECT_TRUE(big.contains(w.apply(default_generator())));
  TransformedCurve m = minimal_model(big);
  EXPECT_EQ(m.curve.discriminant(), base.discriminant());
  EXPECT_TRUE(m.curve.contains(m.transform.apply(w.apply(default_generator()))));
  EXPECT_FALSE(is_minimal_at(big, 2));
  EXPECT_TRUE(is_minimal_at(base, 2));
  EXPECT_EQ(bad_primes(big), (std::vector<Integer>{2, 5}));
}

TEST(Weierstrass, IntegralModel) {
  EllipticCurve e = EllipticCurve::short_form(make_rational(1, 4), make_rational(1, 8));
  TransformedCurve m = integral_model(e);
  EXPECT_TRUE(m.curve.is_integral());
  EXPECT_TRUE(m.curve.contains(m.transform.apply(RationalPoint())));
}

TEST(LocalSeries, OrdersOfFunctions) {
  EllipticCurve e = default_curve();
  BivariatePolynomial x{{{1, 0}, Rational(1)}}, y{{{0, 1}, Rational(1)}};
  EXPECT_EQ(order_at(e, RationalPoint(), x), -2);
  EXPECT_EQ(order_at(e, RationalPoint(), y), -3);
  // x - 1 vanishes simply at (1, 4) and (1, -4).
  BivariatePolynomial xm1{{{1, 0}, Rational(1)}, {{0, 0}, Rational(-1)}};
  EXPECT_EQ(order_at(e, RationalPoint(1, 4), xm1), 1);
  // The tangent line at S1 meets E there with multiplicity 2.
  RationalPoint s1 = default_generator();
  Rational slope = (3 * s1.x() * s1.x() + 5) / (2 * s1.y());
  BivariatePolynomial tangent{{{0, 1}, Rational(1)}, {{1, 0}, -slope}, {{0, 0}, slope * s1.x() - s1.y()}};
  EXPECT_EQ(order_at(e, s1, tangent), 2);
  EXPECT_THROW(order_at(e, RationalPoint(2, 2), x), InvalidInput);
}

TEST(Belyi, ValuesAndRamificationAtCusps) {
  EllipticCurve e = default_curve();
  BelyiMap b = BelyiMap::default_map();
  const std::vector<std::pair<RationalPoint, std::optional<Rational>>> want = {
      {RationalPoint(), std::nullopt}, {RationalPoint(1, 4), Rational(0)}, {RationalPoint(6, -16), Rational(0)},
      {RationalPoint(1, -4), Rational(1)}, {RationalPoint(6, 16), Rational(1)}};
  const int ram[] = {5, 4, 1, 4, 1};
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(eval_belyi(e, b, want[i].first), want[i].second);
    EXPECT_EQ(ramification_index(e, b, want[i].first), ram[i]);
  }
  EXPECT_EQ(eval_belyi(e, b, RationalPoint(-1, -2)), make_rational(7, 8));
}

TEST(CuspStructure, DefaultPairPasses) {
  auto rep = verify_cusp_structure(default_curve(), BelyiMap::default_map(), default_generator(), default_cusps());
  EXPECT_TRUE(rep.ok());
  const std::map<std::string, long> mult = {{"S0", 0}, {"S1", 1}, {"S2", -4}, {"S3", -1}, {"S4", 4}};
  EXPECT_EQ(rep.multiples, mult);
  EXPECT_EQ(rep.ramification.at("S0"), 5);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;
}

TEST(CuspStructure, WrongPointIsNamed) {
  auto cusps = default_cusps();
  cusps[4].point = RationalPoint(6, -16);
  auto rep = verify_cusp_structure(default_curve(), BelyiMap::default_map(), default_generator(), cusps);
  EXPECT_FALSE(rep.ok());
  bool named = false;
  for (const auto& c : rep.checks)
    if (!c.passed && c.name.rfind("fibre_degree", 0) == 0) named = true;
  EXPECT_TRUE(named);
  cusps[4].point = RationalPoint(2, 2);
  rep = verify_cusp_structure(default_curve(), BelyiMap::default_map(), default_generator(), cusps);
  EXPECT_FALSE(rep.ok());
  bool off = false;
  for (const auto& c : rep.checks)
    if (c.name == "on_curve:S4") off = !c.passed;
  EXPECT_TRUE(off);
}

}  // namespace
}  // namespace scattering
