// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/cusps/relations.hpp"

namespace scattering {

UnknownKey UnknownKey::of(const std::string& a, const std::string& b) {
  return a <= b ? UnknownKey{a, b} : UnknownKey{b, a};
}

std::string to_string(const UnknownKey& k) { return "C(" + k.first + "," + k.second + ")"; }

void LinearRelation::add(const UnknownKey& k, const Rational& q) {
  Rational& slot = lhs[k];
  slot += q;
  if (slot == 0) lhs.erase(k);
}

std::string to_string(const LinearRelation& r) {
  std::string out;
  for (const auto& [k, q] : r.lhs) {
    bool neg = q < 0;
    Rational a = neg ? Rational(-q) : q;
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (a != 1) out += to_string(a) + "*";
    out += to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " = " + to_string(r.rhs);
}

Gamma2Constants Gamma2Constants::standard() {
  Gamma2Constants g;
  g.same = Rational(1, 6) * SymbolicConstant::c1() - Rational(7, 3) * SymbolicConstant::log(2);
  g.diff = Rational(1, 6) * SymbolicConstant::c1() - Rational(1, 3) * SymbolicConstant::log(2);
  return g;
}

SymbolicConstant log_over_pi(const Integer& n) {
  SymbolicConstant out;
  if (n == 1) return out;
  for (const auto& [p, e] : factor(n)) out.add(BasisSymbol::log(p.get_si()), Rational(e));
  return out;
}

std::vector<LinearRelation> generate_relations(const CuspClassData& c, const Gamma2Constants& g) {
  std::vector<LinearRelation> out;
  for (Gamma2Class j : {Gamma2Class::kInfinity, Gamma2Class::kZero, Gamma2Class::kOne}) {
    for (const Cusp& k : c.cusps) {
      LinearRelation r;
      r.rhs = k.cls == j ? g.same : g.diff;
      SymbolicConstant logs;
      for (const Cusp& i : c.cusps) {
        if (i.cls != j) continue;
        Rational half(i.width / 2);
        r.add(UnknownKey::of(i.label, k.label), half);
        logs += half * log_over_pi(Integer((i.width / 2) * (k.width / 2)));
      }
      r.rhs -= make_rational(1, 2 * c.index) * logs;
      r.origin = "class " + to_string(j) + ", cusp " + k.label;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace scattering
