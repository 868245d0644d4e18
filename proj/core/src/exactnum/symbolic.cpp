// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/exactnum/symbolic.hpp"

#include "scattering/error.hpp"

namespace scattering {

std::string to_string(const BasisSymbol& s) {
  switch (s.kind) {
    case BasisSymbol::Kind::kC1:
      return "C1";
    case BasisSymbol::Kind::kLog:
      return "LOG" + std::to_string(s.prime);
    case BasisSymbol::Kind::kHnt:
      return "HNT";
  }
  return "?";
}

BasisSymbol parse_symbol(std::string_view text) {
  if (text == "C1") return BasisSymbol::c1();
  if (text == "HNT") return BasisSymbol::hnt();
  if (text.substr(0, 3) == "LOG" && text.size() > 3) {
    Integer p;
    try {
      p = Integer(std::string(text.substr(3)), 10);
    } catch (const std::invalid_argument&) {
      throw InvalidInput("exactnum", "unknown basis symbol '" + std::string(text) + "'");
    }
    if (!is_prime(p) || !p.fits_slong_p()) {
      throw InvalidInput("exactnum", "LOG symbol needs a prime, got '" + std::string(text) + "'");
    }
    return BasisSymbol::log(p.get_si());
  }
  throw InvalidInput("exactnum", "unknown basis symbol '" + std::string(text) + "'");
}

SymbolicConstant::SymbolicConstant(const BasisSymbol& s, const Rational& coeff) { add(s, coeff); }

Rational SymbolicConstant::coefficient(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymbolicConstant::add(const BasisSymbol& s, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

SymbolicConstant& SymbolicConstant::operator+=(const SymbolicConstant& o) {
  for (const auto& [s, q] : o.terms_) add(s, q);
  return *this;
}

SymbolicConstant& SymbolicConstant::operator-=(const SymbolicConstant& o) {
  for (const auto& [s, q] : o.terms_) add(s, -q);
  return *this;
}

SymbolicConstant& SymbolicConstant::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= q;
  return *this;
}

std::string to_string(const SymbolicConstant& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, q] : c.terms()) {
    Rational a = abs(q);
    if (first) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (a != 1) out += to_string(a) + "*";
    out += to_string(s);
    first = false;
  }
  return out;
}

}  // namespace scattering
