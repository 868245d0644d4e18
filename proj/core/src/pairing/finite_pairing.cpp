// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/pairing/finite_pairing.hpp"

#include <set>

#include "scattering/error.hpp"
#include "scattering/pairing/local_intersection.hpp"

namespace scattering {

Rational FinitePairingResult::at(const Integer& p) const {
  auto it = delta.find(p);
  return it == delta.end() ? Rational(0) : it->second;
}

RationalVector section_intersections(const CuspidalDivisor& d, const FiberConfiguration& fiber,
                                     const SectionComponentMap& secmap) {
  RationalVector out(fiber.size());
  for (const auto& [label, c] : d.coeffs()) {
    int id = secmap.at(label);
    const auto& comp = fiber.component(id);
    if (comp.multiplicity != 1) {
      throw Error("pairing", "section " + label + " meets a multiple component");
    }
    out[fiber.index_of(id)] += c;
  }
  return out;
}

CorrectionDivisor correction_divisor(const CuspidalDivisor& d, const FiberConfiguration& fiber,
                                     const SectionComponentMap& secmap) {
  if (d.degree() != 0) {
    throw InvalidInput("pairing", "correction divisor needs degree 0, got " + to_string(d));
  }
  RationalVector rhs = section_intersections(d, fiber, secmap);
  for (auto& x : rhs) x = -x;
  LinearSolution sol = solve_linear_system(fiber.intersection_matrix(), rhs);
  if (!sol.consistent) throw Error("pairing", "no correction divisor for " + to_string(d));

  const std::size_t anchor = fiber.index_of(fiber.identity_id);
  const auto mult = fiber.multiplicity_vector();
  Rational shift = sol.particular[anchor] / mult[anchor];
  CorrectionDivisor phi;
  phi.prime = fiber.prime;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    Rational c = sol.particular[i] - shift * mult[i];
    if (c != 0) phi.coeffs[fiber.components[i].id] = c;
  }
  return phi;
}

bool is_orthogonal(const CuspidalDivisor& d, const CorrectionDivisor& phi,
                   const FiberConfiguration& fiber, const SectionComponentMap& secmap) {
  RationalVector v(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i) v[i] = phi.coefficient(fiber.components[i].id);
  RationalVector lhs = fiber.intersection_matrix() * v;
  RationalVector ds = section_intersections(d, fiber, secmap);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] + ds[i] != 0) return false;
  return true;
}

namespace {

void check_inputs(const CuspidalDivisor& d, const CuspidalDivisor& dp) {
  if (d.degree() != 0 || dp.degree() != 0) {
    throw InvalidInput("pairing", "finite pairing needs degree-0 divisors, got " + to_string(d) +
                                      " and " + to_string(dp));
  }
  if (!disjoint(d, dp)) {
    throw InvalidInput("pairing", to_string(d) + " and " + to_string(dp) +
                                      " share support; replace D' by a linearly equivalent divisor");
  }
}

SectionComponentMap section_map_at(const RegularModel& m, const Integer& p) {
  auto it = m.section_maps.find(p);
  if (it != m.section_maps.end()) return it->second;
  SectionComponentMap sm;
  sm.prime = p;
  for (const auto& s : m.sections) sm.components[s.label] = 1;
  return sm;
}

}  // namespace

Rational local_pairing(const CuspidalDivisor& d, const CuspidalDivisor& dp, const RegularModel& model,
                       const Integer& p) {
  check_inputs(d, dp);
  FiberConfiguration fiber = model.fiber(p);
  SectionComponentMap secmap = section_map_at(model, p);
  CorrectionDivisor phi = correction_divisor(d, fiber, secmap);
  Rational delta = 0;
  for (const auto& [a, ca] : d.coeffs())
    for (const auto& [b, cb] : dp.coeffs()) {
      int i = local_intersection(model.curve, model.point(a), model.point(b), p, secmap.at(a), secmap.at(b));
      delta += Rational(ca * cb * i);
    }
  for (const auto& [b, cb] : dp.coeffs()) delta += cb * phi.coefficient(secmap.at(b));
  return delta;
}

FinitePairingResult finite_pairing(const CuspidalDivisor& d, const CuspidalDivisor& dp,
                                   const RegularModel& model) {
  check_inputs(d, dp);
  std::set<Integer> primes;
  for (const auto& p : model.bad_primes()) primes.insert(p);
  for (const auto& [a, ca] : d.coeffs())
    for (const auto& [b, cb] : dp.coeffs())
      for (const auto& p : meeting_primes(model.point(a), model.point(b))) primes.insert(p);
  FinitePairingResult out;
  for (const auto& p : primes) {
    Rational delta = local_pairing(d, dp, model, p);
    if (delta != 0) out.delta[p] = delta;
  }
  return out;
}

std::vector<DivisorPair> default_delta_pairs() {
  auto D = [](const char* a, const char* b) { return CuspidalDivisor::difference(a, b); };
  return {{D("S1", "S4"), D("S3", "S2")}, {D("S1", "S3"), D("S4", "S2")},
          {D("S1", "S2"), D("S3", "S4")}, {D("S1", "S4"), D("S3", "S0")},
          {D("S1", "S3"), D("S4", "S0")}, {D("S1", "S0"), D("S3", "S4")},
          {D("S1", "S4"), D("S0", "S2")}, {D("S1", "S2"), D("S0", "S4")}};
}

std::vector<DeltaRow> delta_table(const RegularModel& model, const std::vector<DivisorPair>& pairs) {
  std::vector<DeltaRow> out;
  for (const auto& [d, dp] : pairs) out.push_back({d, dp, finite_pairing(d, dp, model)});
  return out;
}

}  // namespace scattering
