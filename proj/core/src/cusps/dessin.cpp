// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/cusps/dessin.hpp"

#include <algorithm>
#include <cctype>

#include "scattering/error.hpp"

namespace scattering {

Permutation Permutation::identity(int n) {
  Permutation p;
  for (int i = 0; i < n; ++i) p.image.push_back(i);
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  if (n < 1) throw InvalidInput("cusps", "permutation degree must be positive");
  Permutation p = identity(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  auto fail = [&](const std::string& why) {
    throw InvalidInput("cusps", "bad cycle notation '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) != 0) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) fail("unclosed cycle");
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<int> pts;
    bool separated = body.find_first_of(" ,") != std::string_view::npos;
    std::size_t k = 0;
    while (k < body.size()) {
      char ch = body[k];
      if (ch == ' ' || ch == ',') {
        ++k;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch)) == 0) fail("unexpected character");
      std::size_t start = k;
      if (separated) {
        while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k])) != 0) ++k;
      } else {
        ++k;
      }
      pts.push_back(std::stoi(std::string(body.substr(start, k - start))));
    }
    for (int v : pts) {
      if (v < 1 || v > n) fail("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v - 1)]) fail("point " + std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      p.image[static_cast<std::size_t>(pts[j] - 1)] = pts[(j + 1) % pts.size()] - 1;
    }
    i = close + 1;
  }
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(image.size(), false);
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (done[s]) continue;
    std::vector<int> c;
    for (std::size_t j = s; !done[j]; j = static_cast<std::size_t>(image[j])) {
      done[j] = true;
      c.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(c);
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) q.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
  return q;
}

Permutation then(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("cusps", "permutations of different degree");
  Permutation c;
  for (int v : a.image) c.image.push_back(b.image[static_cast<std::size_t>(v)]);
  return c;
}

std::string to_string(const Permutation& p) {
  std::string out;
  bool wide = p.degree() > 9;
  for (const auto& c : p.cycles()) {
    if (c.size() == 1) continue;
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (wide && i ? " " : "") + std::to_string(c[i]);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

DessinData DessinData::parse(int degree, std::string_view s0, std::string_view s1) {
  DessinData d{degree, Permutation::parse(s0, degree), Permutation::parse(s1, degree)};
  if (!d.transitive()) throw InvalidInput("cusps", "sigma0 and sigma1 do not act transitively");
  return d;
}

Permutation DessinData::sigma_infinity() const { return then(sigma0, sigma1).inverse(); }

bool DessinData::transitive() const {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto* s : {&sigma0, &sigma1}) {
      int w = s->image[static_cast<std::size_t>(v)];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == degree;
}

std::string to_string(Gamma2Class c) {
  switch (c) {
    case Gamma2Class::kInfinity:
      return "inf";
    case Gamma2Class::kZero:
      return "zero";
    case Gamma2Class::kOne:
      return "one";
  }
  return "?";
}

const Cusp& CuspClassData::cusp(const std::string& label) const {
  for (const auto& c : cusps)
    if (c.label == label) return c;
  throw InvalidInput("cusps", "unknown cusp '" + label + "'");
}

std::vector<std::string> CuspClassData::labels() const {
  std::vector<std::string> out;
  for (const auto& c : cusps) out.push_back(c.label);
  return out;
}

int CuspClassData::class_sum(Gamma2Class cls) const {
  int s = 0;
  for (const auto& c : cusps)
    if (c.cls == cls) s += c.width / 2;
  return s;
}

CuspClassData cusp_data(const DessinData& d) {
  if (!d.transitive()) throw InvalidInput("cusps", "sigma0 and sigma1 do not act transitively");
  CuspClassData out;
  out.index = d.degree;
  const std::pair<Gamma2Class, Permutation> classes[] = {
      {Gamma2Class::kInfinity, d.sigma_infinity()},
      {Gamma2Class::kZero, d.sigma0},
      {Gamma2Class::kOne, d.sigma1}};
  for (const auto& [cls, perm] : classes) {
    int k = 0;
    for (const auto& c : perm.cycles()) {
      out.cusps.push_back({to_string(cls) + std::to_string(++k), cls, 2 * static_cast<int>(c.size()), c});
    }
  }
  return out;
}

std::vector<CuspLabelHint> label_hints(const CuspStructureReport& report) {
  std::vector<CuspLabelHint> out;
  for (const auto& [label, v] : report.values) {
    auto ram = report.ramification.find(label);
    if (ram == report.ramification.end()) continue;
    Gamma2Class cls;
    if (!v) {
      cls = Gamma2Class::kInfinity;
    } else if (*v == 0) {
      cls = Gamma2Class::kZero;
    } else if (*v == 1) {
      cls = Gamma2Class::kOne;
    } else {
      continue;
    }
    out.push_back({label, cls, ram->second});
  }
  return out;
}

CuspClassData cusp_data(const DessinData& d, const std::vector<CuspLabelHint>& hints) {
  CuspClassData out = cusp_data(d);
  std::vector<bool> used(out.cusps.size(), false);
  for (const auto& h : hints) {
    std::vector<std::size_t> match;
    for (std::size_t i = 0; i < out.cusps.size(); ++i)
      if (out.cusps[i].cls == h.cls && out.cusps[i].width == 2 * h.ramification) match.push_back(i);
    if (match.size() != 1) {
      throw InvalidInput("cusps", "cusp " + h.label + " (" + to_string(h.cls) + ", width " +
                                      std::to_string(2 * h.ramification) + ") matches " +
                                      std::to_string(match.size()) + " cycles");
    }
    if (used[match[0]]) throw InvalidInput("cusps", "two labels for one cusp at " + h.label);
    used[match[0]] = true;
    out.cusps[match[0]].label = h.label;
  }
  std::stable_sort(out.cusps.begin(), out.cusps.end(),
                   [](const Cusp& a, const Cusp& b) { return a.label < b.label; });
  return out;
}

}  // namespace scattering
