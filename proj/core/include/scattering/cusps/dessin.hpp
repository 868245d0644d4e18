// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scattering/curve/cusp_structure.hpp"

namespace scattering {

/// Permutation of {1..n}, stored 0-based: image[i] is the image of i + 1, minus one.
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  /// Cycle notation such as "(1235)", "(1 2 3 5)(4)" or "()". Single-digit
  /// points may be written without separators.
  static Permutation parse(std::string_view cycles, int n);

  int degree() const { return static_cast<int>(image.size()); }
  /// Cycles in 1-based points, each starting at its smallest point, ordered
  /// by that point. Fixed points are included.
  std::vector<std::vector<int>> cycles() const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
};

/// Left-to-right product: apply a, then b.
Permutation then(const Permutation& a, const Permutation& b);

std::string to_string(const Permutation& p);

/// Monodromy of a Belyi map: sigma0 and sigma1 are the images of the
/// generators of Gamma(2) around 0 and 1.
struct DessinData {
  int degree = 1;
  Permutation sigma0;
  Permutation sigma1;

  /// Throws InvalidInput for malformed cycles or a non-transitive pair.
  static DessinData parse(int degree, std::string_view sigma0, std::string_view sigma1);

  /// (sigma0 sigma1)^-1.
  Permutation sigma_infinity() const;
  bool transitive() const;
};

enum class Gamma2Class { kInfinity = 0, kZero = 1, kOne = 2 };

std::string to_string(Gamma2Class c);

struct Cusp {
  std::string label;
  Gamma2Class cls = Gamma2Class::kInfinity;
  /// Twice the cycle length.
  int width = 2;
  std::vector<int> cycle;
};

struct CuspClassData {
  int index = 1;
  std::vector<Cusp> cusps;

  const Cusp& cusp(const std::string& label) const;
  std::vector<std::string> labels() const;
  /// Sum of width / 2 over the cusps of a class.
  int class_sum(Gamma2Class c) const;
};

/// Cusps from the cycles of sigma_inf, sigma0 and sigma1 (in that order),
/// labelled "inf1", "zero1", "one1", ... by cycle order.
CuspClassData cusp_data(const DessinData& d);

/// Labels taken from marked points: the class from the value of beta and
/// the width from twice the ramification index.
struct CuspLabelHint {
  std::string label;
  Gamma2Class cls = Gamma2Class::kInfinity;
  int ramification = 1;
};

std::vector<CuspLabelHint> label_hints(const CuspStructureReport& report);

/// cusp_data with every cusp renamed by the unique hint of its class and
/// width. Throws InvalidInput if a hint matches no cusp or several.
CuspClassData cusp_data(const DessinData& d, const std::vector<CuspLabelHint>& hints);

}  // namespace scattering
