// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/model/fiber.hpp"

#include <algorithm>
#include <numeric>

#include "scattering/error.hpp"

namespace scattering {

KodairaType KodairaType::parse(const std::string& label) {
  using F = Family;
  if (label == "II") return {F::kII, 0};
  if (label == "III") return {F::kIII, 0};
  if (label == "IV") return {F::kIV, 0};
  if (label == "II*") return {F::kIIStar, 0};
  if (label == "III*") return {F::kIIIStar, 0};
  if (label == "IV*") return {F::kIVStar, 0};
  if (label.size() >= 2 && label[0] == 'I') {
    bool star = label.back() == '*';
    std::string digits = label.substr(1, label.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      return {star ? F::kIStar : F::kI, std::stoi(digits)};
    }
  }
  throw InvalidInput("model", "unknown Kodaira symbol '" + label + "'");
}

std::string to_string(const KodairaType& t) {
  using F = KodairaType::Family;
  switch (t.family) {
    case F::kI:
      return "I" + std::to_string(t.n);
    case F::kIStar:
      return "I" + std::to_string(t.n) + "*";
    case F::kII:
      return "II";
    case F::kIII:
      return "III";
    case F::kIV:
      return "IV";
    case F::kIIStar:
      return "II*";
    case F::kIIIStar:
      return "III*";
    case F::kIVStar:
      return "IV*";
  }
  return "?";
}

std::size_t FiberConfiguration::index_of(int id) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].id == id) return i;
  throw InvalidInput("model", "no component C" + std::to_string(id) + " at p = " + prime.get_str());
}

RationalMatrix FiberConfiguration::intersection_matrix() const {
  RationalMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = intersection[i][j];
  return m;
}

RationalMatrix FiberConfiguration::scaled_intersection() const {
  RationalMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      m(i, j) = Rational(components[i].multiplicity * components[j].multiplicity * intersection[i][j]);
  return m;
}

RationalVector FiberConfiguration::multiplicity_vector() const {
  RationalVector v;
  for (const auto& c : components) v.emplace_back(c.multiplicity);
  return v;
}

std::vector<int> FiberConfiguration::ids() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.id);
  return out;
}

namespace {

struct Graph {
  std::vector<int> mult;
  std::vector<std::pair<int, int>> edges;  // 1-based ids
};

Graph chain_graph(const std::vector<int>& mult) {
  Graph g{mult, {}};
  for (int i = 1; i < static_cast<int>(mult.size()); ++i) g.edges.push_back({i, i + 1});
  return g;
}

}  // namespace

FiberConfiguration fiber_layout(const Integer& p, const KodairaType& type) {
  using F = KodairaType::Family;
  FiberConfiguration f;
  f.prime = p;
  f.type = type;
  const int n = type.n;

  // single component and two-component fibres carry non-simple-graph data
  auto finish_small = [&](std::vector<std::vector<long>> m, int count) {
    for (int i = 1; i <= count; ++i) f.components.push_back({i, 1, 1});
    f.intersection = std::move(m);
    return f;
  };
  if ((type.family == F::kI && n <= 1) || type.family == F::kII) return finish_small({{0}}, 1);
  if ((type.family == F::kI && n == 2) || type.family == F::kIII)
    return finish_small({{-2, 2}, {2, -2}}, 2);
  if (type.family == F::kIV) return finish_small({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}, 3);

  Graph g;
  switch (type.family) {
    case F::kI:
      g.mult.assign(static_cast<std::size_t>(n), 1);
      for (int i = 1; i <= n; ++i) g.edges.push_back({i, i % n + 1});
      break;
    case F::kIStar:
      if (n == 0) {
        g.mult = {1, 1, 2, 1, 1};
        g.edges = {{1, 3}, {2, 3}, {3, 4}, {3, 5}};
      } else {
        g.mult = {1, 1};
        for (int i = 0; i <= n; ++i) g.mult.push_back(2);
        g.mult.push_back(1);
        g.mult.push_back(1);
        g.edges = {{1, 3}, {2, 3}};
        for (int i = 3; i < n + 3; ++i) g.edges.push_back({i, i + 1});
        g.edges.push_back({n + 3, n + 4});
        g.edges.push_back({n + 3, n + 5});
      }
      break;
    case F::kIVStar:
      g = chain_graph({1, 2, 3, 2, 1});
      g.mult.push_back(2);
      g.mult.push_back(1);
      g.edges.push_back({3, 6});
      g.edges.push_back({6, 7});
      break;
    case F::kIIIStar:
      g = chain_graph({1, 2, 3, 4, 3, 2, 1});
      g.mult.push_back(2);
      g.edges.push_back({4, 8});
      break;
    case F::kIIStar:
      g = chain_graph({1, 2, 3, 4, 5, 6, 4, 2});
      g.mult.push_back(3);
      g.edges.push_back({6, 9});
      break;
    default:
      throw Unsupported("model", "no layout for " + to_string(type));
  }
  const std::size_t k = g.mult.size();
  f.intersection.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    f.components.push_back({static_cast<int>(i) + 1, g.mult[i], 1});
    f.intersection[i][i] = -2;
  }
  for (auto [a, b] : g.edges) {
    f.intersection[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] += 1;
    f.intersection[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] += 1;
  }
  return f;
}

FiberConfiguration relabel(const FiberConfiguration& f, const std::vector<int>& new_ids) {
  if (new_ids.size() != f.size()) throw InvalidInput("model", "relabelling has wrong length");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return new_ids[a] < new_ids[b]; });
  FiberConfiguration out = f;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.components[i] = f.components[order[i]];
    out.components[i].id = new_ids[order[i]];
    for (std::size_t j = 0; j < order.size(); ++j)
      out.intersection[i][j] = f.intersection[order[i]][order[j]];
  }
  out.identity_id = new_ids[f.index_of(f.identity_id)];
  return out;
}

bool is_numerically_trivial(const FiberConfiguration& f) {
  RationalMatrix m = f.intersection_matrix();
  if (!(m == m.transpose())) return false;
  RationalVector mult = f.multiplicity_vector();
  if (!is_zero(m * mult)) return false;
  auto ker = kernel(m);
  return ker.size() == 1;
}

}  // namespace scattering
