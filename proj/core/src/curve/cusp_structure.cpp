// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/curve/cusp_structure.hpp"

#include "scattering/error.hpp"

namespace scattering {

std::vector<MarkedPoint> default_cusps() {
  return {{"S0", RationalPoint::infinity()},
          {"S1", {1, 4}},
          {"S2", {6, -16}},
          {"S3", {1, -4}},
          {"S4", {6, 16}}};
}

RationalPoint default_generator() { return {1, 4}; }

EllipticCurve default_curve() { return EllipticCurve::short_form(5, 10); }

bool CuspStructureReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

namespace {

std::string fibre_name(const std::optional<Rational>& v) { return v ? to_string(*v) : "inf"; }

}  // namespace

CuspStructureReport verify_cusp_structure(const EllipticCurve& e, const BelyiMap& beta,
                                          const RationalPoint& generator,
                                          const std::vector<MarkedPoint>& cusps) {
  CuspStructureReport rep;
  const bool gen_ok = e.contains(generator);
  rep.checks.push_back({"generator_on_curve", gen_ok, to_string(generator)});

  // fibre label ("0", "1", "inf") -> (sum of e, sum of e * P)
  std::map<std::string, std::pair<int, RationalPoint>> fibres;
  for (const auto& name : {"0", "1", "inf"}) fibres[name] = {0, RationalPoint::infinity()};

  for (const auto& c : cusps) {
    bool on = e.contains(c.point);
    rep.checks.push_back({"on_curve:" + c.label, on, to_string(c.point)});
    if (!on) continue;

    auto v = eval_belyi(e, beta, c.point);
    rep.values[c.label] = v;
    bool over = !v || *v == 0 || *v == 1;
    rep.checks.push_back({"belyi_value:" + c.label, over, fibre_name(v)});

    if (gen_ok) {
      auto m = discrete_log(e, generator, c.point);
      rep.checks.push_back({"multiple:" + c.label, m.has_value(),
                            m ? std::to_string(*m) : "not a small multiple of the generator"});
      if (m) rep.multiples[c.label] = *m;
    }
    if (!over) continue;
    int ram = ramification_index(e, beta, c.point);
    rep.ramification[c.label] = ram;
    auto& f = fibres[fibre_name(v)];
    f.first += ram;
    f.second = add(e, f.second, scalar_mul(e, ram, c.point));
  }
  if (!rep.ok()) return rep;

  const auto& inf = fibres["inf"];
  for (const auto& name : {"0", "1"}) {
    const auto& f = fibres[name];
    rep.checks.push_back({std::string("fibre_degree:") + name, f.first == inf.first,
                          std::to_string(f.first) + " vs " + std::to_string(inf.first)});
    rep.checks.push_back({std::string("principal:") + name, f.second == inf.second,
                          to_string(f.second) + " vs " + to_string(inf.second)});
  }
  return rep;
}

}  // namespace scattering
