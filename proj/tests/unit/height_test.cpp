// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scattering/curve/cusp_structure.hpp"
#include "scattering/error.hpp"
#include "scattering/height/canonical_height.hpp"
#include "scattering/model/tate.hpp"

namespace scattering {
namespace {

const char* kReference = "0.1283750629460508690621759";

class GeneratorHeight : public ::testing::TestWithParam<int> {};

TEST_P(GeneratorHeight, MatchesReferenceDigits) {
  int digits = GetParam();
  HeightValue h = canonical_height(default_curve(), default_generator(), PrecisionContext(digits));
  EXPECT_GE(h.digits, digits);
  Real tol = pow(Real(10), -std::min(digits - 1, 24));
  EXPECT_LT(abs(h.value - Real(kReference)), tol) << format_real(h.value, digits);
}

INSTANTIATE_TEST_SUITE_P(Digits, GeneratorHeight, ::testing::Values(16, 20, 25, 40, 100));

TEST(Height, StableAcrossPrecisions) {
  Real a = canonical_height(default_curve(), default_generator(), PrecisionContext(60)).value;
  Real b = canonical_height(default_curve(), default_generator(), PrecisionContext(100)).value;
  EXPECT_LT(abs(a - b), Real("1e-59"));
}

TEST(Height, KnownValueOn37a1) {
  // Generator height of 37a1 in the same normalisation (Cremona's tables).
  HeightValue h = canonical_height(EllipticCurve(0, 0, 1, -1, 0), RationalPoint(0, 0), PrecisionContext(30));
  EXPECT_LT(abs(h.value - Real("0.0511114082399688402358860997569")), Real("1e-29"));
}

TEST(Height, TorsionIsZero) {
  EllipticCurve e(0, -1, 1, -10, -20);
  EXPECT_EQ(canonical_height(e, RationalPoint(5, 5), PrecisionContext(20)).value, 0);
  EXPECT_EQ(canonical_height(e, RationalPoint(), PrecisionContext(20)).value, 0);
}

TEST(Height, Quadratic) {
  EllipticCurve e = default_curve();
  PrecisionContext ctx(30);
  Real h1 = canonical_height(e, default_generator(), ctx).value;
  for (long k = -5; k <= 5; ++k) {
    if (k == 0) continue;
    Real hk = canonical_height(e, scalar_mul(e, k, default_generator()), ctx).value;
    EXPECT_LT(abs(hk - Real(k * k) * h1), Real("1e-25")) << k;
  }
}

TEST(Height, ParallelogramLawOnRankTwoCurve) {
  EllipticCurve e(0, 1, 1, -2, 0);
  PrecisionContext ctx(30);
  RationalPoint p(-1, 1), q(0, 0);
  auto h = [&](const RationalPoint& x) { return canonical_height(e, x, ctx).value; };
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b) {
      RationalPoint x = scalar_mul(e, a, p), y = scalar_mul(e, b, q);
      EXPECT_LT(abs(h(add(e, x, y)) + h(add(e, x, neg(e, y))) - 2 * h(x) - 2 * h(y)), Real("1e-25"));
    }
}

struct ArchCase {
  long a;
  long b;
  long x;
  long y;
};

void PrintTo(const ArchCase& c, std::ostream* os) { *os << c.a << "_" << c.b << "_" << c.x << "_" << c.y; }

class Archimedean : public ::testing::TestWithParam<ArchCase> {};

TEST_P(Archimedean, AgreesWithSigmaFunctionOracle) {
  const auto& c = GetParam();
  EllipticCurve e = EllipticCurve::short_form(c.a, c.b);
  RationalPoint p(c.x, c.y);
  ASSERT_TRUE(e.contains(p));
  Real mine = archimedean_local_height(e, p, PrecisionContext(40));
  oracle::F want = oracle::qseries_local_height(c.a, c.b, p);
  EXPECT_LT(abs(oracle::parse(format_real(mine, 45)) - want), oracle::F("1e-38"));
}

// Negative and positive discriminants, points on the identity component.
INSTANTIATE_TEST_SUITE_P(Curves, Archimedean,
                         ::testing::Values(ArchCase{5, 10, 1, 4}, ArchCase{5, 10, 6, 16}, ArchCase{5, 10, -1, 2},
                                           ArchCase{-36, 0, 12, 36}, ArchCase{-36, 0, 18, 72},
                                           ArchCase{-16, 16, 4, 4}, ArchCase{-16, 16, 8, 20}));

TEST(Height, DuplicationLimit) {
  // The defining limit converges like 4^-n; eight doublings give ~1e-5.
  double h = oracle::duplication_height(default_curve(), default_generator(), 8);
  EXPECT_NEAR(h, 0.12837506294605087, 2e-4);
}

TEST(Height, ComponentCorrections) {
  FiberConfiguration f = fiber_layout(2, KodairaType::parse("I3*"));
  EXPECT_EQ(component_correction(f, 1), 0);
  EXPECT_EQ(component_correction(f, 2), -1);
  EXPECT_EQ(component_correction(f, 7), make_rational(-7, 4));
  FiberConfiguration i5 = fiber_layout(11, KodairaType::parse("I5"));
  EXPECT_EQ(component_correction(i5, 2), make_rational(-4, 5));
  EXPECT_EQ(component_correction(i5, 3), make_rational(-6, 5));
}

TEST(NtPairing, IntegerMultiples) {
  const std::map<std::string, long> m = {{"S0", 0}, {"S1", 1}, {"S2", -4}, {"S3", -1}, {"S4", 4}};
  EXPECT_EQ(nt_pairing(CuspidalDivisor::parse("S1-S2"), CuspidalDivisor::parse("S0-S4"), m), -20);
  EXPECT_EQ(nt_pairing(CuspidalDivisor::parse("S1-S4"), CuspidalDivisor::parse("S3-S2"), m), -9);
  EXPECT_EQ(nt_pairing(CuspidalDivisor(), CuspidalDivisor::parse("S3-S2"), m), 0);
  EXPECT_THROW(nt_pairing(CuspidalDivisor::parse("S1-S9"), CuspidalDivisor::parse("S3-S2"), m), InvalidInput);
}

}  // namespace
}  // namespace scattering
