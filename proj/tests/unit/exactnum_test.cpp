// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scattering/error.hpp"
#include "scattering/exactnum/integer.hpp"
#include "scattering/exactnum/matrix.hpp"
#include "scattering/exactnum/numeric.hpp"
#include "scattering/exactnum/rational.hpp"
#include "scattering/exactnum/symbolic.hpp"

namespace scattering {
namespace {

TEST(Integer, ValuationAndFactor) {
  EXPECT_EQ(valuation(Integer(-51200), 2), 11);
  EXPECT_EQ(valuation(Integer(-51200), 5), 2);
  EXPECT_EQ(valuation(Integer(0), 7), kInfiniteValuation);
  auto f = factor(Integer(-51200));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], std::make_pair(Integer(2), 11));
  EXPECT_EQ(f[1], std::make_pair(Integer(5), 2));
  // Two primes beyond trial division.
  Integer big = Integer("1000000007") * Integer("998244353") * 12;
  auto g = factor(big);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[2].first, Integer("998244353"));
  EXPECT_EQ(g[3].first, Integer("1000000007"));
  EXPECT_THROW(factor(Integer(0)), InvalidInput);
}

TEST(Integer, ModularHelpers) {
  EXPECT_EQ(mod(Integer(-7), Integer(5)), 3);
  EXPECT_EQ(inverse_mod(Integer(3), Integer(7)), 5);
  EXPECT_THROW(inverse_mod(Integer(4), Integer(8)), InvalidInput);
  EXPECT_TRUE(is_prime(Integer(400009)));
  EXPECT_FALSE(is_prime(Integer(1)));
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("25/4"), make_rational(25, 4));
  EXPECT_EQ(parse_rational("-6/8"), make_rational(-3, 4));
  EXPECT_EQ(parse_rational("17"), Rational(17));
  EXPECT_EQ(to_string(make_rational(10, -4)), "-5/2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
  EXPECT_EQ(valuation(make_rational(25, 8), 2), -3);
  EXPECT_EQ(floor(make_rational(-7, 2)), -4);
}

TEST(Matrix, SolveUniqueSystem) {
  RationalMatrix a{{2, 1}, {1, 3}};
  auto s = solve_linear_system(a, {3, 5});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.rank, 2u);
  EXPECT_TRUE(s.kernel.empty());
  EXPECT_EQ(a * s.particular, (RationalVector{3, 5}));
  EXPECT_EQ(s.particular, (RationalVector{make_rational(4, 5), make_rational(7, 5)}));
}

TEST(Matrix, ReportsFirstContradictingRow) {
  RationalMatrix a{{1, 1}, {2, 2}, {1, -1}, {3, 3}};
  auto s = solve_linear_system(a, {1, 2, 0, 4});
  EXPECT_FALSE(s.consistent);
  ASSERT_TRUE(s.inconsistent_row.has_value());
  EXPECT_EQ(*s.inconsistent_row, 3u);
}

TEST(Matrix, KernelMatchesBareissRank) {
  RationalMatrix a{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, make_rational(1, 2), 0}};
  auto k = kernel(a);
  EXPECT_EQ(rank(a), oracle::bareiss_rank(a));
  EXPECT_EQ(k.size(), a.cols() - rank(a));
  for (const auto& v : k) EXPECT_TRUE(is_zero(a * v));
}

TEST(Matrix, ProductsAndTranspose) {
  RationalMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a * RationalMatrix::identity(2), a);
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ((a * a)(1, 0), 15);
}

TEST(Symbolic, CanonicalForm) {
  SymbolicConstant c = make_rational(1, 30) * SymbolicConstant::c1() + make_rational(7, 30) * SymbolicConstant::log(2) -
                       2 * SymbolicConstant::hnt();
  EXPECT_EQ(to_string(c), "1/30*C1 + 7/30*LOG2 - 2*HNT");
  SymbolicConstant d = c - c;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(to_string(d), "0");
  EXPECT_EQ(c.coefficient(BasisSymbol::log(5)), 0);
  EXPECT_EQ(parse_symbol("LOG13"), BasisSymbol::log(13));
  EXPECT_EQ(parse_symbol("HNT"), BasisSymbol::hnt());
  EXPECT_THROW(parse_symbol("LOG"), InvalidInput);
  EXPECT_THROW(parse_symbol("PI"), InvalidInput);
}

TEST(Numeric, PrecisionBounds) {
  EXPECT_THROW(PrecisionContext(15), InvalidInput);
  EXPECT_THROW(PrecisionContext(101), InvalidInput);
  EXPECT_EQ(PrecisionContext(98).raised(5).digits(), 100);
}

class ZetaPrime : public ::testing::TestWithParam<int> {};

TEST_P(ZetaPrime, AgreesWithGlaisherOracle) {
  int digits = GetParam();
  Real z = zeta_prime_minus_one(PrecisionContext(digits));
  oracle::F want = oracle::zeta_prime_minus_one();
  oracle::F got = oracle::parse(format_real(z, digits + 5));
  oracle::F tol = pow(oracle::F(10), -std::min(digits, 50));
  EXPECT_LT(abs(got - want), tol) << format_real(z, digits);
}

INSTANTIATE_TEST_SUITE_P(Digits, ZetaPrime, ::testing::Values(16, 20, 30, 50));

TEST(Numeric, ScatteringConstantOfFullGroup) {
  Real c1 = c1_value(PrecisionContext(40));
  EXPECT_LT(abs(c1 - Real("0.867132427720664555174435972378599047451")), Real("1e-38"));
  // Independent assembly from the oracle value of zeta'(-1).
  oracle::F z = oracle::zeta_prime_minus_one();
  oracle::F pi = boost::math::constants::pi<oracle::F>();
  oracle::F want = -(6 / pi) * (12 * z - 1 + log(4 * pi));
  EXPECT_LT(abs(oracle::parse(format_real(c1, 45)) - want), oracle::F("1e-38"));
}

TEST(Numeric, EvaluatesBasisCombinations) {
  PrecisionContext ctx(30);
  NumericBasis basis = make_basis(Real(0), ctx);
  SymbolicConstant c = 3 * SymbolicConstant::log(2);
  EXPECT_LT(abs(eval_numeric(c, basis) - 3 * log(Real(2)) / pi()), Real("1e-30"));
  EXPECT_EQ(format_real(Real("-0.0013400490574146"), 6), "-0.00134005");
}

}  // namespace
}  // namespace scattering
