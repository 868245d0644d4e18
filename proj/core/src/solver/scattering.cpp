// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/solver/scattering.hpp"

#include <algorithm>
#include <set>

#include "scattering/error.hpp"
#include "scattering/exactnum/matrix.hpp"

namespace scattering {

LinearRelation master_equation(const CuspidalDivisor& d, const CuspidalDivisor& dp,
                               const FinitePairingResult& delta, long nt) {
  LinearRelation r;
  for (const auto& [a, na] : d.coeffs())
    for (const auto& [b, nb] : dp.coeffs()) r.add(UnknownKey::of(a, b), Rational(na * nb));
  r.rhs = make_rational(-nt, 2) * SymbolicConstant::hnt();
  for (const auto& [p, dl] : delta.delta) r.rhs.add(BasisSymbol::log(p.get_si()), -dl / 2);
  r.origin = "height formula for (" + to_string(d) + ", " + to_string(dp) + ")";
  return r;
}

ScatteringTable::ScatteringTable(std::vector<std::string> labels) : labels_(std::move(labels)) {}

const SymbolicConstant& ScatteringTable::at(const std::string& a, const std::string& b) const {
  auto it = entries_.find(UnknownKey::of(a, b));
  if (it == entries_.end()) throw InvalidInput("solver", "no entry for " + to_string(UnknownKey::of(a, b)));
  return it->second;
}

const SymbolicConstant& ScatteringTable::at(std::size_t i, std::size_t j) const {
  if (i >= labels_.size() || j >= labels_.size()) throw InvalidInput("solver", "table index out of range");
  return at(labels_[i], labels_[j]);
}

void ScatteringTable::set(const std::string& a, const std::string& b, SymbolicConstant c) {
  entries_[UnknownKey::of(a, b)] = std::move(c);
}

std::size_t ScatteringTable::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidInput("solver", "unknown label " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<UnknownKey> unknowns(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<UnknownKey> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j) out.push_back({labels[i], labels[j]});
  return out;
}

namespace {

std::string describe(const std::vector<LinearRelation>& eqs, std::size_t i) {
  std::string o = eqs[i].origin.empty() ? "" : " [" + eqs[i].origin + "]";
  return "#" + std::to_string(i) + o + ": " + to_string(eqs[i]);
}

}  // namespace

SolveReport solve_system(const std::vector<std::string>& labels,
                         const std::vector<LinearRelation>& eqs) {
  SolveReport rep;
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  rep.table = ScatteringTable(sorted);
  auto keys = unknowns(sorted);
  rep.unknown_count = keys.size();
  std::map<UnknownKey, std::size_t> col;
  for (std::size_t i = 0; i < keys.size(); ++i) col[keys[i]] = i;

  RationalMatrix a(eqs.size(), keys.size());
  std::set<BasisSymbol> symbols;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (const auto& [k, q] : eqs[i].lhs) {
      auto it = col.find(k);
      if (it == col.end()) throw InvalidInput("solver", "equation mentions unknown " + to_string(k));
      a(i, it->second) = q;
    }
    for (const auto& [s, q] : eqs[i].rhs.terms()) symbols.insert(s);
  }

  // Rows that do not raise the rank, found incrementally in input order.
  std::size_t running = 0;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    RationalMatrix head(i + 1, keys.size());
    for (std::size_t r = 0; r <= i; ++r)
      for (std::size_t c = 0; c < keys.size(); ++c) head(r, c) = a(r, c);
    std::size_t rk = rank(head);
    if (rk == running) rep.redundant.push_back(i);
    running = rk;
  }
  rep.rank = running;

  std::vector<SymbolicConstant> values(keys.size());
  std::vector<RationalVector> kernel_basis;
  for (const auto& s : symbols) {
    RationalVector b(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) b[i] = eqs[i].rhs.coefficient(s);
    LinearSolution sol = solve_linear_system(a, b);
    if (!sol.consistent) {
      if (!rep.inconsistent || *sol.inconsistent_row < *rep.inconsistent) rep.inconsistent = sol.inconsistent_row;
      continue;
    }
    kernel_basis = sol.kernel;
    for (std::size_t c = 0; c < keys.size(); ++c) values[c].add(s, sol.particular[c]);
  }
  if (symbols.empty()) kernel_basis = kernel(a);

  if (rep.inconsistent) {
    rep.message = "inconsistent system; first contradicting equation " + describe(eqs, *rep.inconsistent);
    return rep;
  }
  if (rep.rank < keys.size()) {
    for (std::size_t t = 0; t < kernel_basis.size(); ++t) {
      for (std::size_t c = 0; c < keys.size(); ++c) {
        bool pivot_free = kernel_basis[t][c] == 1;
        for (std::size_t u = 0; u < kernel_basis.size() && pivot_free; ++u)
          if (u != t && kernel_basis[u][c] != 0) pivot_free = false;
        if (pivot_free) {
          rep.free_unknowns.push_back(keys[c]);
          break;
        }
      }
    }
    rep.message = "rank " + std::to_string(rep.rank) + " < " + std::to_string(keys.size()) +
                  " unknowns; undetermined:";
    for (const auto& k : rep.free_unknowns) rep.message += " " + to_string(k);
    if (!rep.redundant.empty()) {
      rep.message += "; equations adding no information:";
      for (std::size_t i : rep.redundant) rep.message += "\n  " + describe(eqs, i);
    }
    return rep;
  }
  for (std::size_t c = 0; c < keys.size(); ++c) rep.table.set(keys[c].first, keys[c].second, values[c]);
  rep.ok = true;
  return rep;
}

ScatteringTable solve_all(const std::vector<std::string>& labels,
                          const std::vector<LinearRelation>& relations,
                          const std::vector<LinearRelation>& masters) {
  std::vector<LinearRelation> eqs = relations;
  eqs.insert(eqs.end(), masters.begin(), masters.end());
  SolveReport rep = solve_system(labels, eqs);
  if (!rep.ok) throw InvalidInput("solver", rep.message);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (!residual(eqs[i], rep.table).is_zero())
      throw Error("solver", "nonzero residual after back-substitution in " + describe(eqs, i));
  }
  return rep.table;
}

SymbolicConstant residual(const LinearRelation& r, const ScatteringTable& t) {
  SymbolicConstant s;
  for (const auto& [k, q] : r.lhs) s += q * t.at(k.first, k.second);
  return s - r.rhs;
}

std::vector<NumericEntry> numeric_table(const ScatteringTable& t, const Real& height,
                                        const PrecisionContext& ctx) {
  NumericBasis basis = make_basis(height, ctx);
  std::vector<NumericEntry> out;
  for (const auto& [k, c] : t.entries()) out.push_back({k.first, k.second, eval_numeric(c, basis)});
  return out;
}

}  // namespace scattering
