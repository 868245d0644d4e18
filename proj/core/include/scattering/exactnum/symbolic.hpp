// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "scattering/exactnum/rational.hpp"

namespace scattering {

/// One transcendental basis element. C1 is the scattering constant of the
/// full modular group, LOG(p) is log(p)/pi and HNT is the canonical height
/// of the generator divided by pi.
struct BasisSymbol {
  enum class Kind { kC1 = 0, kLog = 1, kHnt = 2 };

  Kind kind = Kind::kC1;
  long prime = 0;

  static BasisSymbol c1() { return {Kind::kC1, 0}; }
  static BasisSymbol log(long p) { return {Kind::kLog, p}; }
  static BasisSymbol hnt() { return {Kind::kHnt, 0}; }

  auto operator<=>(const BasisSymbol&) const = default;
};

/// "C1", "LOG2", "HNT".
std::string to_string(const BasisSymbol& s);
BasisSymbol parse_symbol(std::string_view text);

/// Q-linear combination of basis symbols in canonical form: no stored zero
/// coefficients, so equality is plain map equality.
class SymbolicConstant {
 public:
  using Terms = std::map<BasisSymbol, Rational>;

  SymbolicConstant() = default;
  explicit SymbolicConstant(const BasisSymbol& s, const Rational& coeff = 1);

  static SymbolicConstant c1() { return SymbolicConstant(BasisSymbol::c1()); }
  static SymbolicConstant log(long p) { return SymbolicConstant(BasisSymbol::log(p)); }
  static SymbolicConstant hnt() { return SymbolicConstant(BasisSymbol::hnt()); }

  const Terms& terms() const { return terms_; }
  Rational coefficient(const BasisSymbol& s) const;
  bool is_zero() const { return terms_.empty(); }

  SymbolicConstant& operator+=(const SymbolicConstant& o);
  SymbolicConstant& operator-=(const SymbolicConstant& o);
  SymbolicConstant& operator*=(const Rational& q);

  friend SymbolicConstant operator+(SymbolicConstant a, const SymbolicConstant& b) { return a += b; }
  friend SymbolicConstant operator-(SymbolicConstant a, const SymbolicConstant& b) { return a -= b; }
  friend SymbolicConstant operator-(SymbolicConstant a) { return a *= Rational(-1); }
  friend SymbolicConstant operator*(const Rational& q, SymbolicConstant a) { return a *= q; }
  friend SymbolicConstant operator*(SymbolicConstant a, const Rational& q) { return a *= q; }

  bool operator==(const SymbolicConstant& o) const { return terms_ == o.terms_; }

  void add(const BasisSymbol& s, const Rational& q);

 private:
  Terms terms_;
};

/// Human form, e.g. "1/30*C1 + 7/30*LOG2 - 2*HNT"; "0" when empty.
std::string to_string(const SymbolicConstant& c);

}  // namespace scattering
