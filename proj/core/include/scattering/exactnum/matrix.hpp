// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "scattering/exactnum/rational.hpp"

namespace scattering {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalMatrix transpose() const;

  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator*(const RationalMatrix& other) const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct LinearSolution {
  bool consistent = true;
  /// First row (input order) that contradicts the rows before it.
  std::optional<std::size_t> inconsistent_row;
  RationalVector particular;
  std::vector<RationalVector> kernel;
  std::size_t rank = 0;
};

/// Solves A x = b exactly. Rows are eliminated in input order so the
/// reported inconsistent row is the first one that cannot be satisfied.
/// Free variables of the particular solution are zero; the kernel has one
/// basis vector per free column, in column order.
LinearSolution solve_linear_system(const RationalMatrix& a, const RationalVector& b);

std::size_t rank(const RationalMatrix& a);

std::vector<RationalVector> kernel(const RationalMatrix& a);

bool is_zero(const RationalVector& v);

}  // namespace scattering
