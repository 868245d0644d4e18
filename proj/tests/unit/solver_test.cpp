// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include "scattering/curve/cusp_structure.hpp"
#include "scattering/error.hpp"
#include "scattering/height/canonical_height.hpp"
#include "scattering/solver/scattering.hpp"

namespace scattering {
namespace {

const std::vector<std::string> kLabels = {"S0", "S1", "S2", "S3", "S4"};
const std::map<std::string, long> kMultiples = {{"S0", 0}, {"S1", 1}, {"S2", -4}, {"S3", -1}, {"S4", 4}};

SymbolicConstant sym(Rational c1, Rational l2, Rational l5 = 0, Rational h = 0) {
  SymbolicConstant s;
  s.add(BasisSymbol::c1(), c1);
  s.add(BasisSymbol::log(2), l2);
  s.add(BasisSymbol::log(5), l5);
  s.add(BasisSymbol::hnt(), h);
  return s;
}

struct Fixture {
  RegularModel model = build_regular_model(default_curve(), default_cusps());
  CuspClassData cusps = cusp_data(DessinData::parse(5, "(1235)", "(1234)"),
                                  label_hints(verify_cusp_structure(default_curve(), BelyiMap::default_map(), default_generator(), default_cusps())));
  std::vector<LinearRelation> relations = generate_relations(cusps);

  LinearRelation master(const std::string& d, const std::string& dp) const {
    auto a = CuspidalDivisor::parse(d), b = CuspidalDivisor::parse(dp);
    return master_equation(a, b, finite_pairing(a, b, model), nt_pairing(a, b, kMultiples));
  }
};

TEST(Master, Examples) {
  Fixture f;
  LinearRelation m = f.master("S1-S2", "S0-S4");
  LinearRelation want;
  want.add(UnknownKey::of("S0", "S1"), 1);
  want.add(UnknownKey::of("S0", "S2"), -1);
  want.add(UnknownKey::of("S1", "S4"), -1);
  want.add(UnknownKey::of("S2", "S4"), 1);
  want.rhs = sym(0, make_rational(-5, 2), 0, 10);
  EXPECT_EQ(m, want) << to_string(m);

  LinearRelation row1 = f.master("S1-S4", "S3-S2");
  LinearRelation w1;
  w1.add(UnknownKey::of("S1", "S3"), 1);
  w1.add(UnknownKey::of("S1", "S2"), -1);
  w1.add(UnknownKey::of("S3", "S4"), -1);
  w1.add(UnknownKey::of("S2", "S4"), 1);
  w1.rhs = sym(0, make_rational(-25, 8), 1, make_rational(9, 2));
  EXPECT_EQ(row1, w1) << to_string(row1);

  LinearRelation zero = master_equation(CuspidalDivisor(), CuspidalDivisor::parse("S1-S2"), {}, 0);
  EXPECT_TRUE(zero.lhs.empty());
  EXPECT_TRUE(zero.rhs.is_zero());
}

ScatteringTable expected_table() {
  ScatteringTable t(kLabels);
  auto put = [&](const char* a, const char* b, SymbolicConstant c) { t.set(a, b, c); };
  const Rational c = make_rational(1, 30);
  put("S0", "S0", sym(c, make_rational(-7, 15), make_rational(-1, 5)));
  for (auto b : {"S1", "S3"}) put("S0", b, sym(c, make_rational(-4, 15), make_rational(-1, 10)));
  for (auto b : {"S2", "S4"}) put("S0", b, sym(c, make_rational(-1, 15), make_rational(-1, 10)));
  for (auto a : {"S1", "S3"}) put(a, a, sym(c, make_rational(-131, 120), make_rational(1, 8), make_rational(-1, 2)));
  put("S1", "S2", sym(c, make_rational(7, 30), make_rational(-1, 2), 2));
  put("S3", "S4", sym(c, make_rational(7, 30), make_rational(-1, 2), 2));
  put("S1", "S3", sym(c, make_rational(-71, 120), 0, make_rational(1, 2)));
  put("S1", "S4", sym(c, make_rational(7, 30), 0, -2));
  put("S2", "S3", sym(c, make_rational(7, 30), 0, -2));
  for (auto a : {"S2", "S4"}) put(a, a, sym(c, make_rational(-61, 15), 2, -8));
  put("S2", "S4", sym(c, make_rational(-31, 15), 0, 8));
  return t;
}

std::vector<LinearRelation> masters(const Fixture& f, const std::vector<std::pair<const char*, const char*>>& rows) {
  std::vector<LinearRelation> out;
  for (const auto& [a, b] : rows) out.push_back(f.master(a, b));
  return out;
}

TEST(Solve, FullTable) {
  Fixture f;
  auto m = masters(f, {{"S1-S2", "S0-S4"}, {"S1-S4", "S0-S2"}, {"S1-S3", "S4-S0"}});
  ScatteringTable t = solve_all(kLabels, f.relations, m);
  EXPECT_EQ(t, expected_table());
  for (const auto& r : f.relations) EXPECT_TRUE(residual(r, t).is_zero()) << r.origin;
  for (const auto& r : m) EXPECT_TRUE(residual(r, t).is_zero());
  EXPECT_EQ(t.at("S2", "S1"), t.at("S1", "S2"));
}

TEST(Solve, AlternativeRowsAgree) {
  Fixture f;
  auto m = masters(f, {{"S1-S4", "S3-S2"}, {"S1-S3", "S4-S2"}, {"S1-S4", "S3-S0"}});
  EXPECT_EQ(solve_all(kLabels, f.relations, m), expected_table());
}

TEST(Solve, EveryMasterRowIsSatisfied) {
  Fixture f;
  ScatteringTable t = expected_table();
  for (const auto& row : delta_table(f.model)) {
    LinearRelation m = master_equation(row.d, row.dp, row.result, nt_pairing(row.d, row.dp, kMultiples));
    EXPECT_TRUE(residual(m, t).is_zero()) << to_string(row.d) << " " << to_string(row.dp);
  }
}

TEST(Solve, RankDeficientDiagnostic) {
  Fixture f;
  auto m = masters(f, {{"S1-S2", "S0-S4"}, {"S1-S2", "S0-S4"}});
  SolveReport r = solve_system(kLabels, [&] {
    auto all = f.relations;
    all.insert(all.end(), m.begin(), m.end());
    return all;
  }());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.rank, 13u);
  EXPECT_EQ(r.free_unknowns.size(), 2u);
  EXPECT_FALSE(r.message.empty());
  EXPECT_THROW(solve_all(kLabels, f.relations, m), InvalidInput);
}

TEST(Solve, InconsistentDiagnostic) {
  Fixture f;
  auto m = masters(f, {{"S1-S2", "S0-S4"}, {"S1-S4", "S0-S2"}, {"S1-S3", "S4-S0"}});
  LinearRelation bad = m[0];
  bad.rhs += SymbolicConstant::log(5);
  m.push_back(bad);
  std::vector<LinearRelation> all = f.relations;
  all.insert(all.end(), m.begin(), m.end());
  SolveReport r = solve_system(kLabels, all);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.inconsistent.has_value());
  EXPECT_EQ(*r.inconsistent, all.size() - 1);
  EXPECT_THROW(solve_all(kLabels, f.relations, m), InvalidInput);
}

TEST(Solve, NumericValues) {
  PrecisionContext ctx(30);
  Real h = canonical_height(default_curve(), default_generator(), ctx).value;
  auto rows = numeric_table(expected_table(), h, ctx);
  ASSERT_EQ(rows.size(), 15u);
  const std::map<std::pair<std::string, std::string>, const char*> want = {
      {{"S0", "S0"}, "-0.176518865559"}, {{"S1", "S1"}, "-0.168350141906"}, {{"S1", "S2"}, "-0.0940378417200"},
      {{"S1", "S4"}, "-0.00134004905741"}, {{"S2", "S4"}, "-0.100171412657"}, {{"S2", "S2"}, "-0.170651442311"}};
  int seen = 0;
  for (const auto& e : rows) {
    auto it = want.find({e.a, e.b});
    if (it == want.end()) continue;
    ++seen;
    EXPECT_LT(abs(e.value - Real(it->second)), Real("1e-11")) << e.a << e.b;
  }
  EXPECT_EQ(seen, 6);
}

}  // namespace
}  // namespace scattering
