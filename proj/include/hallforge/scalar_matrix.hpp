// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hallforge/scalar.hpp"

namespace hallforge {

/// Dense row-major matrix over the cyclotomic field. Shapes with zero rows
/// or columns are legal and represent maps to or from the zero space.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(Field field, size_t rows, size_t cols);

  static ScalarMatrix identity(const Field& field, size_t n);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix& operator+=(const ScalarMatrix& o);
  ScalarMatrix& operator-=(const ScalarMatrix& o);
  ScalarMatrix scaled(const Scalar& s) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

  ScalarMatrix transpose() const;
  std::vector<Scalar> column(size_t c) const;

 private:
  void check_shape(const ScalarMatrix& o, const char* what) const;

  Field field_;
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns pivot columns in order.
std::vector<size_t> rref(ScalarMatrix& m);

size_t rank(ScalarMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, in increasing column order.
std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m);

/// First column index where a and b differ as columns, for mismatch witnesses.
std::optional<size_t> first_differing_column(const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace hallforge
