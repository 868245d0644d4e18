// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scattering/cusps/dessin.hpp"
#include "scattering/exactnum/symbolic.hpp"

namespace scattering {

/// Unordered pair of cusp labels, stored with first <= second.
struct UnknownKey {
  std::string first;
  std::string second;

  static UnknownKey of(const std::string& a, const std::string& b);
  auto operator<=>(const UnknownKey&) const = default;
};

std::string to_string(const UnknownKey& k);

/// sum lhs[k] * C_k = rhs.
struct LinearRelation {
  std::map<UnknownKey, Rational> lhs;
  SymbolicConstant rhs;
  std::string origin;

  void add(const UnknownKey& k, const Rational& q);
  bool operator==(const LinearRelation& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

/// "4*C(S1,S1) + C(S1,S2) = 1/6*C1 - 62/15*LOG2".
std::string to_string(const LinearRelation& r);

/// Scattering constants of Gamma(2) for two cusps in the same class and in
/// different classes.
struct Gamma2Constants {
  SymbolicConstant same;
  SymbolicConstant diff;

  static Gamma2Constants standard();
};

/// (1/pi) log(n) as a combination of LOG(p).
SymbolicConstant log_over_pi(const Integer& n);

/// One relation per Gamma(2) class j and cusp k:
///   sum_{i in j} (b_i/2) C_ik = C^{Gamma(2)}_{jk} - (1/(2 pi n)) sum_{i in j} (b_i/2) log(b_i b_k / 4).
/// Ordered by class (inf, zero, one), then by cusp order.
std::vector<LinearRelation> generate_relations(const CuspClassData& c,
                                               const Gamma2Constants& g = Gamma2Constants::standard());

}  // namespace scattering
