// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "scattering/exactnum/matrix.hpp"

#include "scattering/error.hpp"

namespace scattering {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("exactnum", "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidInput("exactnum", "dimension mismatch in matrix-vector product");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (other.rows_ != cols_) throw InvalidInput("exactnum", "dimension mismatch in matrix product");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
    }
  return out;
}

namespace {

struct PivotRow {
  std::size_t pivot;
  RationalVector coeffs;
  Rational rhs;
};

}  // namespace

LinearSolution solve_linear_system(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw InvalidInput("exactnum", "right-hand side has wrong length");
  const std::size_t n = a.cols();
  std::vector<PivotRow> basis;
  LinearSolution out;

  for (std::size_t i = 0; i < a.rows(); ++i) {
    RationalVector r = a.row(i);
    Rational rhs = b[i];
    for (const auto& p : basis) {
      if (r[p.pivot] == 0) continue;
      Rational f = r[p.pivot];
      for (std::size_t j = 0; j < n; ++j) r[j] -= f * p.coeffs[j];
      rhs -= f * p.rhs;
    }
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (r[j] != 0) {
        piv = j;
        break;
      }
    if (piv == n) {
      if (rhs != 0 && out.consistent) {
        out.consistent = false;
        out.inconsistent_row = i;
      }
      continue;
    }
    Rational inv = 1 / r[piv];
    for (auto& c : r) c *= inv;
    rhs *= inv;
    for (auto& p : basis) {
      if (p.coeffs[piv] == 0) continue;
      Rational f = p.coeffs[piv];
      for (std::size_t j = 0; j < n; ++j) p.coeffs[j] -= f * r[j];
      p.rhs -= f * rhs;
    }
    basis.push_back({piv, std::move(r), rhs});
  }

  out.rank = basis.size();
  std::vector<bool> is_pivot(n, false);
  for (const auto& p : basis) is_pivot[p.pivot] = true;

  if (out.consistent) {
    out.particular.assign(n, Rational(0));
    for (const auto& p : basis) out.particular[p.pivot] = p.rhs;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector k(n);
    k[f] = 1;
    for (const auto& p : basis) k[p.pivot] = -p.coeffs[f];
    out.kernel.push_back(std::move(k));
  }
  return out;
}

std::size_t rank(const RationalMatrix& a) {
  return solve_linear_system(a, RationalVector(a.rows())).rank;
}

std::vector<RationalVector> kernel(const RationalMatrix& a) {
  return solve_linear_system(a, RationalVector(a.rows())).kernel;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace scattering
