// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering_cli/golden.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "scattering/error.hpp"

namespace scattering::cli {

namespace {

SymbolicConstant sym(const Rational& c1, const Rational& log2, const Rational& log5 = 0,
                     const Rational& hnt = 0) {
  SymbolicConstant s;
  s.add(BasisSymbol::c1(), c1);
  s.add(BasisSymbol::log(2), log2);
  s.add(BasisSymbol::log(5), log5);
  s.add(BasisSymbol::hnt(), hnt);
  return s;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::string label(int i) { return "S" + std::to_string(i); }

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void exact(int group, std::string name, bool ok, const std::string& mismatch = "") {
    out_.push_back({group, std::move(name), ok, ok ? "0" : (mismatch.empty() ? "mismatch" : mismatch)});
  }

  void close(int group, std::string name, const Real& got, const Real& want, const Real& tol) {
    Real diff = abs(got - want);
    out_.push_back({group, std::move(name), diff <= tol, format_real(diff, 3)});
  }

  // Runs body; a thrown Error becomes a failed check with its message.
  template <typename F>
  void guarded(int group, const std::string& name, F body) {
    try {
      body();
    } catch (const Error& e) {
      out_.push_back({group, name, false, e.what()});
    }
  }

 private:
  std::vector<Check>& out_;
};

std::string show(const SymbolicConstant& c) { return to_string(c); }

const std::vector<std::vector<long>> kScaledIntersectionAt2 = {
    {-2, 0, 2, 0, 0, 0, 0, 0},  {0, -2, 2, 0, 0, 0, 0, 0},  {2, 2, -8, 4, 0, 0, 0, 0},
    {0, 0, 4, -8, 4, 0, 0, 0},  {0, 0, 0, 4, -8, 4, 0, 0},  {0, 0, 0, 0, 4, -8, 2, 2},
    {0, 0, 0, 0, 0, 2, -2, 0},  {0, 0, 0, 0, 0, 2, 0, -2}};

struct DeltaGolden {
  const char* d;
  const char* dp;
  Rational delta2;
  Rational delta5;
};

std::vector<DeltaGolden> delta_golden() {
  return {{"S1-S4", "S3-S2", q(25, 4), q(-2)}, {"S1-S3", "S4-S2", q(0), q(-2)},
          {"S1-S2", "S3-S4", q(25, 4), q(0)},  {"S1-S4", "S3-S0", q(5, 4), q(-1)},
          {"S1-S3", "S4-S0", q(0), q(-1)},     {"S1-S0", "S3-S4", q(5, 4), q(0)},
          {"S1-S4", "S0-S2", q(5), q(-1)},     {"S1-S2", "S0-S4", q(5), q(0)}};
}

// Entry (a, b) = base + coeff * C(ref).
struct RelationGolden {
  int a;
  int b;
  SymbolicConstant base;
  Rational coeff;
  int ref_a;
  int ref_b;
};

std::vector<RelationGolden> prop_list() {
  const SymbolicConstant none;
  return {
      {0, 0, sym(q(1, 30), q(-14, 30), q(-6, 30)), 0, 0, 0},
      {0, 1, sym(q(1, 30), q(-8, 30), q(-3, 30)), 0, 0, 0},
      {0, 2, sym(q(1, 30), q(-2, 30), q(-3, 30)), 0, 0, 0},
      {0, 3, sym(q(1, 30), q(-8, 30), q(-3, 30)), 0, 0, 0},
      {0, 4, sym(q(1, 30), q(-2, 30), q(-3, 30)), 0, 0, 0},
      {1, 1, sym(q(1, 24), q(-62, 60)), q(-1, 4), 1, 2},
      {1, 3, sym(q(1, 24), q(-32, 60)), q(-1, 4), 1, 4},
      {2, 2, sym(q(1, 6), q(-47, 15)), q(-4), 1, 2},
      {2, 3, none, q(1), 1, 4},
      {2, 4, sym(q(1, 6), q(-17, 15)), q(-4), 1, 4},
      {3, 3, sym(q(1, 24), q(-62, 60)), q(-1, 4), 3, 4},
      {4, 4, sym(q(1, 6), q(-47, 15)), q(-4), 3, 4},
  };
}

struct NumericGolden {
  int a;
  int b;
  const char* value;
};

const NumericGolden kNumeric[] = {
    {0, 0, "-0.176518865559"},   {0, 1, "-0.0811617456560"},  {0, 2, "-0.0370346256255"},
    {0, 3, "-0.0811617456560"},  {0, 4, "-0.0370346256255"},  {1, 1, "-0.168350141906"},
    {1, 2, "-0.0940378417200"},  {1, 3, "-0.0812067899954"},  {1, 4, "-0.00134004905741"},
    {2, 2, "-0.170651442311"},   {2, 3, "-0.00134004905741"}, {2, 4, "-0.100171412657"},
    {3, 3, "-0.168350141906"},   {3, 4, "-0.0940378417200"},  {4, 4, "-0.170651442311"}};

const char* kHeight = "0.1283750629460508690621759";

void model_checks(const FullRun& run, Recorder& rec) {
  const auto& m = run.model;
  auto bad = m.bad_primes();
  rec.exact(1, "bad primes are 2 and 5", bad == std::vector<Integer>{2, 5});
  FiberConfiguration f2 = m.fiber(2);
  rec.exact(1, "fibre at 2 has type I3*", f2.type == KodairaType::parse("I3*"), to_string(f2.type));
  std::vector<int> mult;
  for (const auto& c : f2.components) mult.push_back(c.multiplicity);
  rec.exact(1, "fibre at 2 multiplicities (1,1,2,2,2,2,1,1)", mult == std::vector<int>{1, 1, 2, 2, 2, 2, 1, 1});
  RationalMatrix want(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) want(i, j) = kScaledIntersectionAt2[i][j];
  rec.exact(1, "fibre at 2 scaled intersection matrix", f2.size() == 8 && f2.scaled_intersection() == want);
  FiberConfiguration f5 = m.fiber(5);
  rec.exact(1, "fibre at 5 is irreducible", f5.size() == 1, to_string(f5.type));
}

void section_checks(const FullRun& run, Recorder& rec) {
  const std::map<std::string, int> want = {{"S0", 1}, {"S1", 7}, {"S2", 1}, {"S3", 8}, {"S4", 1}};
  for (const auto& [l, id] : want) {
    rec.guarded(2, "section " + l + " meets C" + std::to_string(id) + " at 2", [&] {
      int got = run.model.component(2, l);
      rec.exact(2, "section " + l + " meets C" + std::to_string(id) + " at 2", got == id, "C" + std::to_string(got));
    });
  }
}

void intersection_checks(const FullRun& run, Recorder& rec) {
  std::map<std::tuple<std::string, std::string, long>, int> got;
  for (const auto& e : run.pairing.intersections)
    if (e.prime == 2 || e.prime == 5) got[{e.a, e.b, e.prime.get_si()}] = e.value;
  auto expect = [&](const char* a, const char* b, long p, int v) {
    auto it = got.find({a, b, p});
    int have = it == got.end() ? 0 : it->second;
    rec.exact(3, std::string("i_") + std::to_string(p) + "(" + a + "," + b + ") = " + std::to_string(v), have == v,
              std::to_string(have));
    if (it != got.end()) got.erase(it);
  };
  expect("S2", "S4", 2, 5);
  expect("S1", "S2", 5, 1);
  expect("S3", "S4", 5, 1);
  std::string extra;
  for (const auto& [k, v] : got)
    extra += std::get<0>(k) + std::get<1>(k) + "@" + std::to_string(std::get<2>(k)) + "=" + std::to_string(v) + " ";
  rec.exact(3, "all other intersections at 2 and 5 vanish", got.empty(), extra);
}

void correction_checks(const FullRun& run, Recorder& rec) {
  rec.guarded(4, "Phi(S1-S4) at 2", [&] {
    FiberConfiguration f2 = run.model.fiber(2);
    const auto& sm = run.model.section_maps.at(2);
    auto d = CuspidalDivisor::difference("S1", "S4");
    CorrectionDivisor phi = correction_divisor(d, f2, sm);
    CorrectionDivisor ref{2, {{1, q(-5, 4)}, {2, q(-3, 4)}, {3, q(-3, 2)}, {4, q(-1)}, {5, q(-1, 2)}, {7, q(1, 2)}}};
    rec.exact(4, "Phi(S1-S4) at 2 equals the reference modulo the fibre", equivalent_mod_fiber(phi, ref, f2));
    rec.exact(4, "Phi(S1-S4) at 2 is orthogonal to every component", is_orthogonal(d, phi, f2, sm));
    rec.exact(4, "reference Phi(S1-S4) is orthogonal to every component", is_orthogonal(d, ref, f2, sm));
  });
}

void delta_checks(const FullRun& run, Recorder& rec) {
  auto golden = delta_golden();
  for (std::size_t i = 0; i < golden.size(); ++i) {
    const auto& g = golden[i];
    std::string name = std::string("delta row (") + g.d + ", " + g.dp + ")";
    auto d = CuspidalDivisor::parse(g.d);
    auto dp = CuspidalDivisor::parse(g.dp);
    const DeltaRow* row = nullptr;
    for (const auto& r : run.pairing.deltas)
      if (r.d == d && r.dp == dp) row = &r;
    if (row == nullptr) {
      rec.exact(5, name, false, "row not in configuration");
      continue;
    }
    FinitePairingResult want;
    if (g.delta2 != 0) want.delta[2] = g.delta2;
    if (g.delta5 != 0) want.delta[5] = g.delta5;
    std::string got;
    for (const auto& [p, v] : row->result.delta) got += to_string(p) + ":" + to_string(v) + " ";
    rec.exact(5, name, row->result == want, got);
  }
  std::string stray;
  for (const auto& r : run.pairing.deltas)
    for (const auto& [p, v] : r.result.delta)
      if (p != 2 && p != 5) stray += to_string(p) + " ";
  rec.exact(5, "delta_p = 0 for p outside {2, 5}", stray.empty(), stray);
}

void height_checks(const FullRun& run, Recorder& rec) {
  rec.guarded(6, "heights", [&] {
    PrecisionContext ctx(std::max(25, run.prepared.config.digits));
    const auto& e = run.prepared.minimal;
    const auto& g = run.prepared.generator;
    HeightValue h = canonical_height(e, g, ctx);
    rec.close(6, "height of the generator to 1e-20 at 25 digits", h.value, Real(kHeight), Real("1e-20"));
    PrecisionContext c20(20);
    Real h1 = canonical_height(e, g, c20).value;
    for (long k = 2; k <= 5; ++k) {
      Real hk = canonical_height(e, scalar_mul(e, k, g), c20).value;
      rec.close(6, "height(" + std::to_string(k) + "P) = " + std::to_string(k * k) + " height(P)", hk,
                Real(k * k) * h1, Real("1e-15"));
    }
    // Parallelogram law on a rank-two curve, where it is not implied by
    // quadraticity along one generator.
    EllipticCurve e389(0, 1, 1, -2, 0);
    RationalPoint p(-1, 1), r(0, 0);
    auto H = [&](const RationalPoint& x) { return canonical_height(e389, x, c20).value; };
    rec.close(6, "parallelogram law on y^2 + y = x^3 + x^2 - 2x",
              H(add(e389, p, r)) + H(add(e389, p, neg(e389, r))), 2 * H(p) + 2 * H(r), Real("1e-15"));
    long n = nt_pairing(CuspidalDivisor::parse("S1-S2"), CuspidalDivisor::parse("S0-S4"),
                        run.prepared.structure.multiples);
    rec.exact(6, "<S1-S2, S0-S4> = -20 height(S1)", n == -20, std::to_string(n));
  });
}

void cusp_checks(const FullRun& run, Recorder& rec) {
  const auto& c = run.cusps.cusps;
  rec.exact(7, "index 5", c.index == 5, std::to_string(c.index));
  const std::map<std::string, int> widths = {{"S0", 10}, {"S1", 8}, {"S2", 2}, {"S3", 8}, {"S4", 2}};
  std::string got;
  bool ok = c.cusps.size() == widths.size();
  for (const auto& k : c.cusps) {
    got += k.label + ":" + std::to_string(k.width) + " ";
    auto it = widths.find(k.label);
    ok = ok && it != widths.end() && it->second == k.width;
  }
  rec.exact(7, "widths (10, 8, 2, 8, 2)", ok, got);
  for (Gamma2Class cls : {Gamma2Class::kInfinity, Gamma2Class::kZero, Gamma2Class::kOne})
    rec.exact(7, "class " + to_string(cls) + " width sum equals the index", c.class_sum(cls) == c.index,
              std::to_string(c.class_sum(cls)));
  LinearRelation want;
  want.add(UnknownKey::of("S1", "S1"), 4);
  want.add(UnknownKey::of("S1", "S2"), 1);
  want.rhs = sym(q(1, 6), q(-62, 15));
  bool found = std::any_of(run.cusps.relations.begin(), run.cusps.relations.end(),
                           [&](const LinearRelation& r) { return r == want; });
  rec.exact(7, "relation " + to_string(want), found);
}

void solver_checks(const FullRun& run, Recorder& rec) {
  const auto& t = run.solver.table;
  auto entry = [&](int a, int b) { return t.at(label(a), label(b)); };
  rec.guarded(8, "solver", [&] {
    SymbolicConstant c14 = sym(q(1, 30), q(7, 30), 0, q(-2));
    SymbolicConstant c12 = sym(q(1, 30), q(7, 30), q(-1, 2), q(2));
    rec.exact(8, "C14 = (C1 + 7 LOG2 - 60 HNT) / 30", entry(1, 4) == c14, show(entry(1, 4)));
    rec.exact(8, "C12 = (C1 + 7 LOG2 - 15 LOG5 + 60 HNT) / 30", entry(1, 2) == c12, show(entry(1, 2)));
    rec.exact(8, "C34 = (C1 + 7 LOG2 - 15 LOG5 + 60 HNT) / 30", entry(3, 4) == c12, show(entry(3, 4)));
    rec.exact(8, "C23 = C14", entry(2, 3) == entry(1, 4));
    for (const auto& g : prop_list()) {
      SymbolicConstant want = g.base;
      if (g.coeff != 0) want += g.coeff * entry(g.ref_a, g.ref_b);
      rec.exact(8, "C" + std::to_string(g.a) + std::to_string(g.b) + " matches the linear relation list",
                entry(g.a, g.b) == want, show(entry(g.a, g.b)));
    }
    bool c1 = true;
    for (const auto& [k, v] : t.entries()) c1 = c1 && v.coefficient(BasisSymbol::c1()) == q(1, 30);
    rec.exact(8, "every entry has C1 coefficient 1/30", c1 && t.entries().size() == 15);
    std::string bad;
    for (const auto& r : run.cusps.relations)
      if (!residual(r, t).is_zero()) bad += r.origin + "; ";
    for (const auto& r : run.solver.masters)
      if (!residual(r, t).is_zero()) bad += r.origin + "; ";
    rec.exact(8, "zero residual in every relation and every height formula", bad.empty(), bad);
    rec.exact(8, "alternative rows give the identical table",
              run.solver.alternative.has_value() && *run.solver.alternative == t);
  });
}

void numeric_checks(const FullRun& run, Recorder& rec) {
  const auto& t = run.solver.table;
  for (const auto& g : kNumeric) {
    std::string a = label(g.a), b = label(g.b);
    auto it = std::find_if(run.solver.numeric.begin(), run.solver.numeric.end(), [&](const NumericEntry& n) {
      return UnknownKey::of(n.a, n.b) == UnknownKey::of(a, b);
    });
    std::string name = "C" + std::to_string(g.a) + std::to_string(g.b) + " ~ " + g.value;
    if (it == run.solver.numeric.end() || t.labels().empty()) {
      rec.exact(9, name, false, "missing");
      continue;
    }
    rec.close(9, name, it->value, Real(g.value), Real("1e-10"));
  }
}

using Delta = std::map<Integer, Rational>;

Delta sum(Delta a, const Delta& b, int sign = 1) {
  for (const auto& [p, v] : b) {
    a[p] += sign * v;
    if (a[p] == 0) a.erase(p);
  }
  return a;
}

}  // namespace

std::vector<Check> golden_checks(const FullRun& run) {
  std::vector<Check> out;
  Recorder rec(out);
  model_checks(run, rec);
  section_checks(run, rec);
  intersection_checks(run, rec);
  correction_checks(run, rec);
  delta_checks(run, rec);
  height_checks(run, rec);
  cusp_checks(run, rec);
  solver_checks(run, rec);
  numeric_checks(run, rec);
  return out;
}

std::vector<Check> property_checks(const FullRun& run, unsigned seed) {
  std::vector<Check> out;
  Recorder rec(out);
  const auto& model = run.model;
  std::vector<std::string> labels;
  for (const auto& s : model.sections) labels.push_back(s.label);
  const std::size_t n = labels.size();

  // All ordered pairs (D, D') = (a - b, c - d) with a, b, c, d distinct.
  std::size_t sym_total = 0, sym_bad = 0;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, Delta> cache;
  auto fp = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> const Delta& {
    auto key = std::make_tuple(a, b, c, d);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, finite_pairing(CuspidalDivisor::difference(labels[a], labels[b]),
                                             CuspidalDivisor::difference(labels[c], labels[d]), model).delta).first;
    return it->second;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          std::set<std::size_t> s{a, b, c, d};
          if (s.size() != 4) continue;
          ++sym_total;
          if (fp(a, b, c, d) != fp(c, d, a, b)) ++sym_bad;
        }
  rec.exact(10, "finite pairing symmetric on " + std::to_string(sym_total) + " disjoint marked pairs",
            sym_bad == 0 && sym_total > 0, std::to_string(sym_bad) + " asymmetric");

  std::size_t lin_total = 0, lin_bad = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e) {
            std::set<std::size_t> s{a, b, c, d, e};
            if (s.size() != 5) continue;
            ++lin_total;
            // (a - b) + (b - c) = a - c against d - e, in both slots.
            if (sum(fp(a, b, d, e), fp(b, c, d, e)) != fp(a, c, d, e)) ++lin_bad;
            if (sum(fp(d, e, a, b), fp(d, e, b, c)) != fp(d, e, a, c)) ++lin_bad;
            // Antisymmetry in each slot.
            if (sum(fp(a, b, d, e), fp(b, a, d, e)) != Delta{}) ++lin_bad;
          }
  rec.exact(10, "finite pairing bilinear on " + std::to_string(lin_total) + " marked triples",
            lin_bad == 0 && lin_total > 0, std::to_string(lin_bad) + " violations");

  std::string nontrivial;
  for (const auto& [p, f] : model.fibers)
    if (!is_numerically_trivial(f)) nontrivial += to_string(p) + " ";
  rec.exact(10, "every computed fibre is numerically trivial", nontrivial.empty(), nontrivial);

  rec.guarded(10, "relabelling invariance", [&] {
    std::size_t bad = 0, tried = 0;
    std::mt19937 rng(seed);
    for (const auto& [p, f] : model.fibers) {
      if (f.size() < 2) continue;
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> ids = f.ids();
        std::shuffle(ids.begin(), ids.end(), rng);
        for (int& id : ids) id += 100;
        RegularModel m2 = relabel(model, p, ids);
        for (const auto& row : run.pairing.deltas) {
          ++tried;
          if (!(finite_pairing(row.d, row.dp, m2) == row.result)) ++bad;
        }
      }
    }
    rec.exact(10, "finite pairing invariant under " + std::to_string(tried) + " component relabellings",
              bad == 0 && tried > 0, std::to_string(bad) + " changed");
  });

  rec.guarded(10, "group law", [&] {
    struct Sample {
      EllipticCurve e;
      std::vector<RationalPoint> gens;
    };
    std::vector<Sample> samples = {{run.prepared.minimal, {run.prepared.generator}},
                                   {EllipticCurve(0, 0, 1, -1, 0), {RationalPoint(0, 0)}},
                                   {EllipticCurve(0, 1, 1, -2, 0), {RationalPoint(-1, 1), RationalPoint(0, 0)}},
                                   {EllipticCurve(0, -1, 1, -10, -20), {RationalPoint(5, 5)}}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coef(-6, 6);
    std::size_t bad = 0, tried = 0;
    for (const auto& s : samples) {
      auto rand_point = [&] {
        RationalPoint p;
        for (const auto& g : s.gens) p = add(s.e, p, scalar_mul(s.e, coef(rng), g));
        return p;
      };
      for (int t = 0; t < 25; ++t) {
        RationalPoint p = rand_point(), q2 = rand_point(), r = rand_point();
        const auto& e = s.e;
        ++tried;
        bool ok = e.contains(p) && e.contains(add(e, p, q2));
        ok = ok && add(e, p, RationalPoint()) == p;
        ok = ok && add(e, p, neg(e, p)).is_infinity();
        ok = ok && add(e, p, q2) == add(e, q2, p);
        ok = ok && add(e, add(e, p, q2), r) == add(e, p, add(e, q2, r));
        ok = ok && scalar_mul(e, 3, p) == add(e, p, add(e, p, p));
        if (!ok) ++bad;
      }
    }
    rec.exact(10, "group-law axioms on " + std::to_string(tried) + " seeded random triples", bad == 0,
              std::to_string(bad) + " failures");
  });
  return out;
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"group", c.group}, {"name", c.name}, {"passed", c.passed}, {"discrepancy", c.discrepancy}});
  return out;
}

std::vector<Check> checks_from_json(const Json& j) {
  std::vector<Check> out;
  for (const auto& c : j)
    out.push_back({c.at("group").get<int>(), c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                   c.at("discrepancy").get<std::string>()});
  return out;
}

}  // namespace scattering::cli
