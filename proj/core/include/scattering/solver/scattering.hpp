// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scattering/cusps/relations.hpp"
#include "scattering/exactnum/numeric.hpp"
#include "scattering/pairing/finite_pairing.hpp"

namespace scattering {

/// The height formula for a pair of disjoint degree-zero cuspidal divisors,
///   <D, D'> = -sum_p delta_p log p - 2 pi sum n_j m_k C_jk,
/// divided by -2 pi so that every coefficient is rational:
///   sum n_j m_k C_jk = -(n/2) HNT - sum (delta_p / 2) LOG(p),
/// where <D, D'> = n * height(generator).
LinearRelation master_equation(const CuspidalDivisor& d, const CuspidalDivisor& dp,
                               const FinitePairingResult& delta, long nt);

/// Symmetric table of constants indexed by cusp label.
class ScatteringTable {
 public:
  ScatteringTable() = default;
  explicit ScatteringTable(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  const SymbolicConstant& at(const std::string& a, const std::string& b) const;
  const SymbolicConstant& at(std::size_t i, std::size_t j) const;
  void set(const std::string& a, const std::string& b, SymbolicConstant c);
  const std::map<UnknownKey, SymbolicConstant>& entries() const { return entries_; }
  std::size_t index_of(const std::string& label) const;

  bool operator==(const ScatteringTable&) const = default;

 private:
  std::vector<std::string> labels_;
  std::map<UnknownKey, SymbolicConstant> entries_;
};

/// Unknowns C(a, b), a <= b, in lexicographic order over the sorted labels.
std::vector<UnknownKey> unknowns(std::vector<std::string> labels);

struct SolveReport {
  bool ok = false;
  std::size_t rank = 0;
  std::size_t unknown_count = 0;
  /// Unknowns left undetermined when the system is rank deficient.
  std::vector<UnknownKey> free_unknowns;
  /// Equations (input order) that added nothing to the rank.
  std::vector<std::size_t> redundant;
  /// First equation contradicting the ones before it.
  std::optional<std::size_t> inconsistent;
  std::string message;
  ScatteringTable table;
};

/// Solves the system exactly, one right-hand side per basis symbol.
SolveReport solve_system(const std::vector<std::string>& labels,
                         const std::vector<LinearRelation>& equations);

/// Throws InvalidInput with the diagnostic when the system has no unique
/// solution.
ScatteringTable solve_all(const std::vector<std::string>& labels,
                          const std::vector<LinearRelation>& relations,
                          const std::vector<LinearRelation>& masters);

/// lhs - rhs with the table substituted.
SymbolicConstant residual(const LinearRelation& r, const ScatteringTable& t);

struct NumericEntry {
  std::string a;
  std::string b;
  Real value;
};

/// Every entry (a <= b) evaluated with the given height of the generator.
std::vector<NumericEntry> numeric_table(const ScatteringTable& t, const Real& height,
                                        const PrecisionContext& ctx);

}  // namespace scattering
