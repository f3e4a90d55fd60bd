// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/scalar_matrix.hpp"

#include <string>
#include <utility>

#include "hallforge/error.hpp"

namespace hallforge {

ScalarMatrix::ScalarMatrix(Field field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

ScalarMatrix ScalarMatrix::identity(const Field& field, size_t n) {
  ScalarMatrix m(field, n, n);
  for (size_t k = 0; k < n; ++k) m.at(k, k) = field->one();
  return m;
}

void ScalarMatrix::check_shape(const ScalarMatrix& o, const char* what) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ConsistencyError(std::string("shape mismatch in matrix ") + what);
  }
}

bool ScalarMatrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw ConsistencyError("shape mismatch in matrix product");
  ScalarMatrix r(field_ ? field_ : o.field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
  check_shape(o, "sum");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
  check_shape(o, "difference");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  ScalarMatrix r = *this;
  return r += o;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  ScalarMatrix r = *this;
  return r -= o;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
  ScalarMatrix r = *this;
  for (auto& e : r.data_) {
    if (!e.is_zero()) e *= s;
  }
  return r;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw ConsistencyError("shape mismatch in matrix-vector product");
  std::vector<Scalar> y(rows_, field_->zero());
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero() || x[k].is_zero()) continue;
      y[i] += at(i, k) * x[k];
    }
  }
  return y;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix r(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

std::vector<Scalar> ScalarMatrix::column(size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
  return out;
}

std::vector<size_t> rref(ScalarMatrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    const Scalar inv = m.at(row, col).inv();
    for (size_t j = col; j < m.cols(); ++j) {
      if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
    }
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (size_t j = col; j < m.cols(); ++j) {
        if (!m.at(row, j).is_zero()) m.at(r, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(ScalarMatrix m) { return rref(m).size(); }

std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(m.cols(), m.field()->zero());
    x[free] = m.field()->one();
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<size_t> first_differing_column(const ScalarMatrix& a, const ScalarMatrix& b) {
  for (size_t c = 0; c < a.cols() && c < b.cols(); ++c) {
    for (size_t r = 0; r < a.rows() && r < b.rows(); ++r) {
      if (a.at(r, c) != b.at(r, c)) return c;
    }
  }
  if (a.cols() != b.cols() || a.rows() != b.rows()) return 0;
  return std::nullopt;
}

}  // namespace hallforge
