// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hallforge {

/// Matrix over the prime field F_p, row-major, entries in [0, p).
/// A matrix of shape (t x s) is the linear map F_p^s -> F_p^t on columns.
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(int p, int rows, int cols);
  GFMatrix(int p, int rows, int cols, std::vector<int> entries);

  static GFMatrix identity(int p, int n);

  int prime() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  int at(int r, int c) const { return entries_[static_cast<size_t>(r * cols_ + c)]; }
  void set(int r, int c, long value);

  GFMatrix operator*(const GFMatrix& o) const;
  GFMatrix operator+(const GFMatrix& o) const;
  GFMatrix transpose() const;
  /// Columns [first, first + count) as a new matrix.
  GFMatrix columns(int first, int count) const;

  bool is_zero() const;
  friend bool operator==(const GFMatrix& a, const GFMatrix& b) = default;
  friend auto operator<=>(const GFMatrix& a, const GFMatrix& b) = default;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> entries_;
};

int inverse_mod(int a, int p);

/// Row-reduces in place; returns pivot columns.
std::vector<int> rref(GFMatrix& m);
int mat_rank(GFMatrix m);
/// Injective as a map on column vectors: rank equals the column count.
bool is_injective(const GFMatrix& m);
GFMatrix inverse(const GFMatrix& m);

/// Horizontal concatenation [a | b]; row counts must agree.
GFMatrix hconcat(const GFMatrix& a, const GFMatrix& b);
/// Vertical stacking; column counts must agree.
GFMatrix vstack(std::span<const GFMatrix> blocks, int cols);

/// |GL(n, F_p)| = prod_{k<n} (p^n - p^k).
std::uint64_t gl_order(int n, int p);
/// Number of injective linear maps F_p^k -> F_p^n.
std::uint64_t injective_count(int k, int n, int p);
/// Gaussian binomial [n choose k]_p, via the product formula.
std::uint64_t gaussian_binomial(int n, int k, int p);

/// Largest n for which GL(n, F_p) may be fully enumerated by default.
int default_gl_bound(int p);

/// All invertible n x n matrices over F_p in row-major lexicographic order.
/// Throws ScaleError when n exceeds the bound.
std::vector<GFMatrix> enumerate_invertible(int n, int p, int bound = -1);

/// All injective maps F_p^k -> F_p^n as n x k matrices.
std::vector<GFMatrix> enumerate_injective(int k, int n, int p);

/// Every k-dimensional subspace of F_p^n exactly once, each as its k x n
/// reduced row echelon basis.
std::vector<GFMatrix> enumerate_subspaces(int n, int k, int p);

/// Generators of GL(n, F_p): elementary transvections and one diagonal
/// matrix carrying a primitive root.
std::vector<GFMatrix> gl_generators(int n, int p);

int primitive_root(int p);

}  // namespace hallforge
