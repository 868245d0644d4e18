// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "scattering/model/regular_model.hpp"
#include "scattering/pairing/divisor.hpp"

namespace scattering {

/// delta_p per prime; primes with delta_p = 0 are omitted.
struct FinitePairingResult {
  std::map<Integer, Rational> delta;

  Rational at(const Integer& p) const;
  bool operator==(const FinitePairingResult&) const = default;
};

/// (D . C_l) for every component, in fibre order.
RationalVector section_intersections(const CuspidalDivisor& d, const FiberConfiguration& fiber,
                                     const SectionComponentMap& secmap);

/// The Q-divisor Phi supported on the fibre with (D + Phi) . C_l = 0 for
/// every l, normalised to coefficient 0 on the identity component. Throws
/// InvalidInput unless deg D = 0.
CorrectionDivisor correction_divisor(const CuspidalDivisor& d, const FiberConfiguration& fiber,
                                     const SectionComponentMap& secmap);

/// Recomputes (D + Phi) . C_l by matrix multiplication.
bool is_orthogonal(const CuspidalDivisor& d, const CorrectionDivisor& phi,
                   const FiberConfiguration& fiber, const SectionComponentMap& secmap);

/// (D + Phi(D), D')_fin = sum_p delta_p log p. D and D' must have degree
/// zero and disjoint supports.
FinitePairingResult finite_pairing(const CuspidalDivisor& d, const CuspidalDivisor& dp,
                                   const RegularModel& model);

/// delta_p at a single prime.
Rational local_pairing(const CuspidalDivisor& d, const CuspidalDivisor& dp, const RegularModel& model,
                       const Integer& p);

using DivisorPair = std::pair<CuspidalDivisor, CuspidalDivisor>;

struct DeltaRow {
  CuspidalDivisor d;
  CuspidalDivisor dp;
  FinitePairingResult result;
};

/// The eight pairs (S1-S4, S3-S2), (S1-S3, S4-S2), ..., (S1-S2, S0-S4).
std::vector<DivisorPair> default_delta_pairs();

std::vector<DeltaRow> delta_table(const RegularModel& model,
                                  const std::vector<DivisorPair>& pairs = default_delta_pairs());

}  // namespace scattering
