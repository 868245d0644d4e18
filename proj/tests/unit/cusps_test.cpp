// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <algorithm>

#include "scattering/curve/cusp_structure.hpp"
#include "scattering/cusps/dessin.hpp"
#include "scattering/cusps/relations.hpp"
#include "scattering/error.hpp"
#include "scattering/solver/scattering.hpp"

namespace scattering {
namespace {

CuspClassData default_cusps_data() {
  DessinData d = DessinData::parse(5, "(1235)", "(1234)");
  return cusp_data(d, label_hints(verify_cusp_structure(default_curve(), BelyiMap::default_map(), default_generator(), default_cusps())));
}

SymbolicConstant sym(Rational c1, Rational l2, Rational l5 = 0, Rational h = 0) {
  SymbolicConstant s;
  s.add(BasisSymbol::c1(), c1);
  s.add(BasisSymbol::log(2), l2);
  s.add(BasisSymbol::log(5), l5);
  s.add(BasisSymbol::hnt(), h);
  return s;
}

TEST(Permutation, ParseForms) {
  EXPECT_EQ(Permutation::parse("(1235)", 5), Permutation::parse("(1 2 3 5)(4)", 5));
  EXPECT_EQ(Permutation::parse("()", 3), Permutation::identity(3));
  EXPECT_EQ(to_string(Permutation::parse("(1235)", 5)), "(1235)");
  EXPECT_THROW(Permutation::parse("(126)", 5), InvalidInput);
  EXPECT_THROW(Permutation::parse("(121)", 5), InvalidInput);
  EXPECT_THROW(Permutation::parse("(12", 5), InvalidInput);
}

TEST(Permutation, CompositionAndInverse) {
  Permutation a = Permutation::parse("(123)", 4), b = Permutation::parse("(34)", 4);
  Permutation ab = then(a, b);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(ab.image[i], b.image[a.image[i]]);
  EXPECT_EQ(then(a, a.inverse()), Permutation::identity(4));
}

TEST(Dessin, SigmaInfinity) {
  DessinData d = DessinData::parse(5, "(1235)", "(1234)");
  EXPECT_EQ(d.sigma_infinity(), Permutation::parse("(14253)", 5));
  EXPECT_EQ(then(then(d.sigma0, d.sigma1), d.sigma_infinity()), Permutation::identity(5));
}

TEST(Dessin, TrivialCover) {
  CuspClassData c = cusp_data(DessinData::parse(1, "()", "()"));
  EXPECT_EQ(c.index, 1);
  ASSERT_EQ(c.cusps.size(), 3u);
  for (const auto& k : c.cusps) EXPECT_EQ(k.width, 2);
}

TEST(Dessin, RejectsNonTransitive) {
  EXPECT_THROW(DessinData::parse(4, "(12)", "(34)"), InvalidInput);
}

TEST(Dessin, WidthsAndClasses) {
  CuspClassData c = default_cusps_data();
  EXPECT_EQ(c.index, 5);
  EXPECT_EQ(c.labels(), (std::vector<std::string>{"S0", "S1", "S2", "S3", "S4"}));
  const std::vector<std::pair<Gamma2Class, int>> want = {{Gamma2Class::kInfinity, 10},
                                                         {Gamma2Class::kZero, 8},
                                                         {Gamma2Class::kZero, 2},
                                                         {Gamma2Class::kOne, 8},
                                                         {Gamma2Class::kOne, 2}};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(c.cusps[i].cls, want[i].first);
    EXPECT_EQ(c.cusps[i].width, want[i].second);
  }
  for (auto cls : {Gamma2Class::kInfinity, Gamma2Class::kZero, Gamma2Class::kOne}) EXPECT_EQ(c.class_sum(cls), 5);
}

TEST(Dessin, HintsMustMatchUniquely) {
  DessinData d = DessinData::parse(5, "(1235)", "(1234)");
  std::vector<CuspLabelHint> hints = {{"A", Gamma2Class::kInfinity, 5}, {"B", Gamma2Class::kZero, 4},
                                      {"C", Gamma2Class::kZero, 1},     {"D", Gamma2Class::kOne, 4},
                                      {"E", Gamma2Class::kOne, 3}};
  EXPECT_THROW(cusp_data(d, hints), InvalidInput);
}

TEST(Relations, Examples) {
  auto rels = generate_relations(default_cusps_data());
  ASSERT_EQ(rels.size(), 15u);
  auto find = [&](const LinearRelation& want) {
    return std::find(rels.begin(), rels.end(), want) != rels.end();
  };
  LinearRelation r1;
  r1.add(UnknownKey::of("S1", "S1"), 4);
  r1.add(UnknownKey::of("S2", "S1"), 1);
  r1.rhs = sym(make_rational(1, 6), make_rational(-62, 15));
  EXPECT_TRUE(find(r1)) << to_string(r1);
  LinearRelation r2;
  r2.add(UnknownKey::of("S0", "S2"), 5);
  r2.rhs = sym(make_rational(1, 6), make_rational(-1, 3), make_rational(-1, 2));
  EXPECT_TRUE(find(r2)) << to_string(r2);
  LinearRelation r3;
  r3.add(UnknownKey::of("S3", "S0"), 4);
  r3.add(UnknownKey::of("S4", "S0"), 1);
  r3.rhs = sym(make_rational(1, 6), make_rational(-17, 15), make_rational(-1, 2));
  EXPECT_TRUE(find(r3)) << to_string(r3);
  EXPECT_EQ(to_string(r1), "4*C(S1,S1) + C(S1,S2) = 1/6*C1 - 62/15*LOG2");
}

TEST(Relations, LogOverPi) {
  EXPECT_TRUE(log_over_pi(1).is_zero());
  EXPECT_EQ(log_over_pi(20), sym(0, 2, 1));
  EXPECT_THROW(log_over_pi(0), InvalidInput);
}

TEST(Relations, LeaveThreeDimensionalSolutionSpace) {
  CuspClassData c = default_cusps_data();
  auto rels = generate_relations(c);
  SolveReport r = solve_system(c.labels(), rels);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.unknown_count, 15u);
  EXPECT_EQ(r.rank, 12u);
  EXPECT_EQ(r.free_unknowns.size(), 3u);
  EXPECT_FALSE(r.inconsistent.has_value());

  // Pinning C12, C14, C34 closes the system.
  for (auto k : {UnknownKey::of("S1", "S2"), UnknownKey::of("S1", "S4"), UnknownKey::of("S3", "S4")}) {
    LinearRelation pin;
    pin.add(k, 1);
    pin.rhs = SymbolicConstant::hnt();
    rels.push_back(pin);
  }
  SolveReport full = solve_system(c.labels(), rels);
  EXPECT_TRUE(full.ok) << full.message;
  EXPECT_EQ(full.rank, 15u);
}

}  // namespace
}  // namespace scattering
