// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "scattering/exactnum/matrix.hpp"

namespace scattering {

struct KodairaType {
  enum class Family { kI, kIStar, kII, kIII, kIV, kIIStar, kIIIStar, kIVStar };

  Family family = Family::kI;
  /// n of I_n and I_n*; zero otherwise.
  int n = 0;

  static KodairaType parse(const std::string& label);

  bool operator==(const KodairaType&) const = default;
};

/// "I0", "I3", "I3*", "II", "III", "IV", "II*", "III*", "IV*".
std::string to_string(const KodairaType& t);

struct FiberComponent {
  int id = 0;
  int multiplicity = 1;
  /// Degree of the field of definition of the geometric component.
  int residue_degree = 1;

  bool operator==(const FiberComponent&) const = default;
};

/// Special fibre of the minimal regular model at one prime. Components are
/// geometric; the intersection matrix is indexed by position in
/// `components` and is unscaled (C_i . C_j).
struct FiberConfiguration {
  Integer prime = 0;
  KodairaType type;
  /// Split multiplicative reduction (meaningful for I_n, n >= 1).
  bool split = true;
  std::vector<FiberComponent> components;
  std::vector<std::vector<long>> intersection;
  /// Component met by the zero section.
  int identity_id = 1;
  int tamagawa = 1;
  int conductor_exponent = 0;

  std::size_t size() const { return components.size(); }
  std::size_t index_of(int id) const;
  const FiberComponent& component(int id) const { return components[index_of(id)]; }

  RationalMatrix intersection_matrix() const;
  /// Entry (i, j) = m_i m_j (C_i . C_j).
  RationalMatrix scaled_intersection() const;
  RationalVector multiplicity_vector() const;
  std::vector<int> ids() const;

  bool operator==(const FiberConfiguration&) const = default;
};

/// Dual graph of a Kodaira type in the canonical labelling:
///   I_n:   C1 = Theta_0, C_{i+1} = Theta_i around the cycle
///   I_n*:  C1 = Theta_0, C2 near tip, C3..C_{n+3} chain, C_{n+4}, C_{n+5} far tips
///   I0*:   tips C1, C2, centre C3, tips C4, C5
///   IV*:   C1-C2-C3-C4-C5 with C6-C7 attached to C3
///   III*:  chain C1..C7 with C8 attached to C4
///   II*:   chain C1..C8 with C9 attached to C6
FiberConfiguration fiber_layout(const Integer& p, const KodairaType& type);

/// Renames component k (by position) to new_ids[k] and sorts by new id.
FiberConfiguration relabel(const FiberConfiguration& f, const std::vector<int>& new_ids);

/// Checks sum_i m_i (C_i . C_j) = 0 for all j, symmetry, and kernel = span(m).
bool is_numerically_trivial(const FiberConfiguration& f);

}  // namespace scattering
