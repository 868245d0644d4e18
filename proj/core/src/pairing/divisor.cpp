// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/pairing/divisor.hpp"

#include <cctype>

#include "scattering/error.hpp"

namespace scattering {

CuspidalDivisor::CuspidalDivisor(const std::map<std::string, long>& coeffs) {
  for (const auto& [l, c] : coeffs) add(l, c);
}

void CuspidalDivisor::add(const std::string& label, long c) {
  if (c == 0) return;
  long& slot = coeffs_[label];
  slot += c;
  if (slot == 0) coeffs_.erase(label);
}

CuspidalDivisor CuspidalDivisor::parse(std::string_view text) {
  CuspidalDivisor d;
  std::size_t i = 0;
  auto fail = [&]() {
    throw InvalidInput("pairing", "malformed cuspidal divisor '" + std::string(text) + "'");
  };
  auto skip = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
  };
  skip();
  if (text.substr(i) == "0") return d;
  bool first = true;
  while (i < text.size()) {
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail();
    }
    long coeff = 1;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) ++i;
    if (i > start) coeff = std::stol(std::string(text.substr(start, i - start)));
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    start = i;
    if (i >= text.size() || std::isalpha(static_cast<unsigned char>(text[i])) == 0) fail();
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) ++i;
    if (i - start < 2) fail();
    d.add(std::string(text.substr(start, i - start)), sign * coeff);
    skip();
    first = false;
  }
  if (first) fail();
  return d;
}

CuspidalDivisor CuspidalDivisor::difference(const std::string& a, const std::string& b) {
  CuspidalDivisor d;
  d.add(a, 1);
  d.add(b, -1);
  return d;
}

long CuspidalDivisor::coefficient(const std::string& label) const {
  auto it = coeffs_.find(label);
  return it == coeffs_.end() ? 0 : it->second;
}

long CuspidalDivisor::degree() const {
  long s = 0;
  for (const auto& [l, c] : coeffs_) s += c;
  return s;
}

std::set<std::string> CuspidalDivisor::support() const {
  std::set<std::string> out;
  for (const auto& [l, c] : coeffs_) out.insert(l);
  return out;
}

CuspidalDivisor& CuspidalDivisor::operator+=(const CuspidalDivisor& o) {
  for (const auto& [l, c] : o.coeffs_) add(l, c);
  return *this;
}

CuspidalDivisor operator-(CuspidalDivisor a, const CuspidalDivisor& b) {
  for (const auto& [l, c] : b.coeffs_) a.add(l, -c);
  return a;
}

std::string to_string(const CuspidalDivisor& d) {
  if (d.is_zero()) return "0";
  // positive terms first, keeping "S1-S4" in its usual order
  std::string out;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& [l, c] : d.coeffs()) {
      if ((c > 0) != (pass == 0)) continue;
      long a = c < 0 ? -c : c;
      if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
      if (a != 1) out += std::to_string(a);
      out += l;
    }
  }
  return out;
}

bool disjoint(const CuspidalDivisor& a, const CuspidalDivisor& b) {
  for (const auto& [l, c] : a.coeffs())
    if (b.coefficient(l) != 0) return false;
  return true;
}

Rational CorrectionDivisor::coefficient(int id) const {
  auto it = coeffs.find(id);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool equivalent_mod_fiber(const CorrectionDivisor& a, const CorrectionDivisor& b,
                          const FiberConfiguration& fiber) {
  // a - b must be lambda * (sum m_i C_i)
  const auto& first = fiber.components.front();
  Rational lambda = (a.coefficient(first.id) - b.coefficient(first.id)) / first.multiplicity;
  for (const auto& c : fiber.components) {
    if (a.coefficient(c.id) - b.coefficient(c.id) != lambda * c.multiplicity) return false;
  }
  for (const auto& [id, q] : a.coeffs) fiber.index_of(id);
  for (const auto& [id, q] : b.coeffs) fiber.index_of(id);
  return true;
}

}  // namespace scattering
