// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/model/regular_model.hpp"

#include "scattering/curve/weierstrass.hpp"
#include "scattering/error.hpp"

namespace scattering {

FiberConfiguration RegularModel::fiber(const Integer& p) const {
  auto it = fibers.find(p);
  if (it != fibers.end()) return it->second;
  return fiber_layout(p, KodairaType{KodairaType::Family::kI, 0});
}

int RegularModel::component(const Integer& p, const std::string& label) const {
  auto it = section_maps.find(p);
  if (it == section_maps.end()) {
    point(label);
    return 1;
  }
  return it->second.at(label);
}

const RationalPoint& RegularModel::point(const std::string& label) const {
  for (const auto& s : sections)
    if (s.label == label) return s.point;
  throw InvalidInput("model", "unknown section '" + label + "'");
}

std::vector<Integer> RegularModel::bad_primes() const {
  std::vector<Integer> out;
  for (const auto& [p, f] : fibers) out.push_back(p);
  return out;
}

RegularModel build_regular_model(const EllipticCurve& e, const std::vector<MarkedPoint>& sections) {
  if (!e.is_integral()) throw InvalidInput("model", "regular model needs an integral curve");
  RegularModel m{e, sections, {}, {}};
  for (const auto& p : prime_divisors(e.discriminant().get_num())) {
    std::vector<RationalPoint> pts;
    for (const auto& s : sections) pts.push_back(s.point);
    TateResult r = run_tate(e, p, pts);
    m.fibers.emplace(p, r.fiber);
    SectionComponentMap sm;
    sm.prime = p;
    for (std::size_t i = 0; i < sections.size(); ++i) sm.components[sections[i].label] = r.components[i];
    m.section_maps.emplace(p, std::move(sm));
  }
  return m;
}

RegularModel relabel(const RegularModel& m, const Integer& p, const std::vector<int>& new_ids) {
  RegularModel out = m;
  const FiberConfiguration& f = m.fibers.at(p);
  out.fibers[p] = relabel(f, new_ids);
  out.section_maps[p] = relabel(m.section_maps.at(p), f, new_ids);
  return out;
}

}  // namespace scattering
