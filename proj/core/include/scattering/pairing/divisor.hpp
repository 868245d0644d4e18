// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "scattering/model/fiber.hpp"

namespace scattering {

/// Formal Z-combination of marked cusps, keyed by label ("S0", "S1", ...).
class CuspidalDivisor {
 public:
  CuspidalDivisor() = default;
  explicit CuspidalDivisor(const std::map<std::string, long>& coeffs);

  /// Parses "S1-S4", "2S1+S3-3S0", "-S2 + S0". Labels are a letter followed
  /// by digits.
  static CuspidalDivisor parse(std::string_view text);
  /// a - b.
  static CuspidalDivisor difference(const std::string& a, const std::string& b);

  const std::map<std::string, long>& coeffs() const { return coeffs_; }
  long coefficient(const std::string& label) const;
  long degree() const;
  std::set<std::string> support() const;
  bool is_zero() const { return coeffs_.empty(); }

  CuspidalDivisor& operator+=(const CuspidalDivisor& o);
  friend CuspidalDivisor operator+(CuspidalDivisor a, const CuspidalDivisor& b) { return a += b; }
  friend CuspidalDivisor operator-(CuspidalDivisor a, const CuspidalDivisor& b);
  bool operator==(const CuspidalDivisor&) const = default;

 private:
  void add(const std::string& label, long c);
  std::map<std::string, long> coeffs_;
};

/// "S1-S4"; "0" for the zero divisor.
std::string to_string(const CuspidalDivisor& d);

bool disjoint(const CuspidalDivisor& a, const CuspidalDivisor& b);

/// Q-combination of the components of one fibre, keyed by component id.
struct CorrectionDivisor {
  Integer prime = 0;
  std::map<int, Rational> coeffs;

  Rational coefficient(int id) const;
  bool operator==(const CorrectionDivisor&) const = default;
};

/// Equality modulo rational multiples of the whole fibre.
bool equivalent_mod_fiber(const CorrectionDivisor& a, const CorrectionDivisor& b,
                          const FiberConfiguration& fiber);

}  // namespace scattering
