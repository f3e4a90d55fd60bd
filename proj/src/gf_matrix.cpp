// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/gf_matrix.hpp"

#include <string>
#include <utility>

#include "hallforge/error.hpp"

namespace hallforge {

GFMatrix::GFMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols), 0) {}

GFMatrix::GFMatrix(int p, int rows, int cols, std::vector<int> entries)
    : p_(p), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(rows * cols)) throw ConsistencyError("GFMatrix entry count mismatch");
  for (int& e : entries_) e = ((e % p_) + p_) % p_;
}

GFMatrix GFMatrix::identity(int p, int n) {
  GFMatrix m(p, n, n);
  for (int k = 0; k < n; ++k) m.set(k, k, 1);
  return m;
}

void GFMatrix::set(int r, int c, long value) {
  entries_[static_cast<size_t>(r * cols_ + c)] = static_cast<int>(((value % p_) + p_) % p_);
}

GFMatrix GFMatrix::operator*(const GFMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw ConsistencyError("GFMatrix product shape mismatch");
  GFMatrix r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      long acc = 0;
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.set(i, j, acc);
    }
  }
  return r;
}

GFMatrix GFMatrix::operator+(const GFMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ConsistencyError("GFMatrix sum shape mismatch");
  GFMatrix r(p_, rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = (entries_[k] + o.entries_[k]) % p_;
  return r;
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  }
  return r;
}

GFMatrix GFMatrix::columns(int first, int count) const {
  GFMatrix r(p_, rows_, count);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < count; ++j) r.set(i, j, at(i, first + j));
  }
  return r;
}

bool GFMatrix::is_zero() const {
  for (int e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

int inverse_mod(int a, int p) {
  a = ((a % p) + p) % p;
  if (a == 0) throw std::domain_error("zero has no inverse mod p");
  int result = 1;
  int base = a;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::vector<int> rref(GFMatrix& m) {
  const int p = m.prime();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (int j = 0; j < m.cols(); ++j) {
        const int tmp = m.at(sel, j);
        m.set(sel, j, m.at(row, j));
        m.set(row, j, tmp);
      }
    }
    const int inv = inverse_mod(m.at(row, col), p);
    for (int j = 0; j < m.cols(); ++j) m.set(row, j, m.at(row, j) * inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const int f = m.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < m.cols(); ++j) m.set(r, j, m.at(r, j) - f * m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int mat_rank(GFMatrix m) { return static_cast<int>(rref(m).size()); }

bool is_injective(const GFMatrix& m) { return mat_rank(m) == m.cols(); }

GFMatrix inverse(const GFMatrix& m) {
  if (m.rows() != m.cols()) throw ConsistencyError("inverse of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return m;
  GFMatrix aug = hconcat(m, GFMatrix::identity(m.prime(), n));
  const auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[static_cast<size_t>(n - 1)] != n - 1) {
    throw std::domain_error("matrix is singular over F_p");
  }
  return aug.columns(n, n);
}

GFMatrix hconcat(const GFMatrix& a, const GFMatrix& b) {
  if (a.rows() != b.rows()) throw ConsistencyError("hconcat row mismatch");
  GFMatrix r(a.prime(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

GFMatrix vstack(std::span<const GFMatrix> blocks, int cols) {
  int rows = 0;
  int p = 2;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ConsistencyError("vstack column mismatch");
    rows += b.rows();
    p = b.prime();
  }
  GFMatrix r(p, rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i) {
      for (int j = 0; j < cols; ++j) r.set(off + i, j, b.at(i, j));
    }
    off += b.rows();
  }
  return r;
}

std::uint64_t gl_order(int n, int p) { return injective_count(n, n, p); }

std::uint64_t injective_count(int k, int n, int p) {
  if (k > n) return 0;
  std::uint64_t pn = 1;
  for (int j = 0; j < n; ++j) pn *= static_cast<std::uint64_t>(p);
  std::uint64_t result = 1;
  std::uint64_t pk = 1;
  for (int j = 0; j < k; ++j) {
    result *= (pn - pk);
    pk *= static_cast<std::uint64_t>(p);
  }
  return result;
}

std::uint64_t gaussian_binomial(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  // prod_{j<k} (p^{n-j} - 1) / (p^{j+1} - 1)
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (int j = 0; j < k; ++j) {
    std::uint64_t a = 1;
    for (int t = 0; t < n - j; ++t) a *= static_cast<std::uint64_t>(p);
    std::uint64_t b = 1;
    for (int t = 0; t < j + 1; ++t) b *= static_cast<std::uint64_t>(p);
    num *= (a - 1);
    den *= (b - 1);
  }
  return num / den;
}

int default_gl_bound(int p) {
  if (p == 2) return 4;
  if (p == 3) return 3;
  return 2;
}

std::vector<GFMatrix> enumerate_invertible(int n, int p, int bound) {
  if (bound < 0) bound = default_gl_bound(p);
  if (n > bound) {
    throw ScaleError("GL(" + std::to_string(n) + ", F_" + std::to_string(p) + ") exceeds enumeration bound",
                     static_cast<double>(gl_order(n, p)));
  }
  // Build row by row, each row outside the span of the previous ones.
  std::vector<GFMatrix> out;
  std::uint64_t vectors = 1;
  for (int j = 0; j < n; ++j) vectors *= static_cast<std::uint64_t>(p);
  std::vector<std::vector<int>> rows;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      std::vector<int> e;
      e.reserve(static_cast<size_t>(n * n));
      for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
      out.emplace_back(p, n, n, std::move(e));
      return;
    }
    for (std::uint64_t code = 0; code < vectors; ++code) {
      std::vector<int> row(static_cast<size_t>(n));
      std::uint64_t c = code;
      for (int j = n - 1; j >= 0; --j) {
        row[static_cast<size_t>(j)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
        c /= static_cast<std::uint64_t>(p);
      }
      std::vector<int> e;
      for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
      e.insert(e.end(), row.begin(), row.end());
      if (mat_rank(GFMatrix(p, depth + 1, n, e)) != depth + 1) continue;
      rows.push_back(std::move(row));
      self(self, depth + 1);
      rows.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<GFMatrix> enumerate_injective(int k, int n, int p) {
  std::vector<GFMatrix> out;
  if (k > n) return out;
  // Rows of the transpose are the images of basis vectors.
  std::uint64_t vectors = 1;
  for (int j = 0; j < n; ++j) vectors *= static_cast<std::uint64_t>(p);
  std::vector<std::vector<int>> cols;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      GFMatrix m(p, n, k);
      for (int j = 0; j < k; ++j) {
        for (int i = 0; i < n; ++i) m.set(i, j, cols[static_cast<size_t>(j)][static_cast<size_t>(i)]);
      }
      out.push_back(std::move(m));
      return;
    }
    for (std::uint64_t code = 0; code < vectors; ++code) {
      std::vector<int> col(static_cast<size_t>(n));
      std::uint64_t c = code;
      for (int i = n - 1; i >= 0; --i) {
        col[static_cast<size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
        c /= static_cast<std::uint64_t>(p);
      }
      std::vector<int> e;
      for (const auto& r : cols) e.insert(e.end(), r.begin(), r.end());
      e.insert(e.end(), col.begin(), col.end());
      if (mat_rank(GFMatrix(p, depth + 1, n, e)) != depth + 1) continue;
      cols.push_back(std::move(col));
      self(self, depth + 1);
      cols.pop_back();
    }
  };
  if (k == 0) {
    out.emplace_back(p, n, 0);
    return out;
  }
  rec(rec, 0);
  return out;
}

std::vector<GFMatrix> enumerate_subspaces(int n, int k, int p) {
  std::vector<GFMatrix> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pivots;
  auto fill = [&](const std::vector<int>& piv) {
    // Free slots: in row r, columns greater than piv[r] that are not pivots.
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < k; ++r) {
      for (int c = piv[static_cast<size_t>(r)] + 1; c < n; ++c) {
        if (!is_pivot[static_cast<size_t>(c)]) slots.emplace_back(r, c);
      }
    }
    std::uint64_t total = 1;
    for (size_t s = 0; s < slots.size(); ++s) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < total; ++code) {
      GFMatrix m(p, k, n);
      for (int r = 0; r < k; ++r) m.set(r, piv[static_cast<size_t>(r)], 1);
      std::uint64_t c = code;
      for (size_t s = slots.size(); s-- > 0;) {
        m.set(slots[s].first, slots[s].second, static_cast<long>(c % static_cast<std::uint64_t>(p)));
        c /= static_cast<std::uint64_t>(p);
      }
      out.push_back(std::move(m));
    }
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pivots.size()) == k) {
      fill(pivots);
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots.push_back(c);
      self(self, c + 1);
      pivots.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int primitive_root(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    int x = 1;
    for (int e = 1; e < p - 1; ++e) {
      x = x * g % p;
      if (x == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw ConsistencyError("no primitive root found");
}

std::vector<GFMatrix> gl_generators(int n, int p) {
  std::vector<GFMatrix> gens;
  if (n == 0) return gens;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      GFMatrix t = GFMatrix::identity(p, n);
      t.set(a, b, 1);
      gens.push_back(std::move(t));
    }
  }
  if (p > 2) {
    GFMatrix d = GFMatrix::identity(p, n);
    d.set(0, 0, primitive_root(p));
    gens.push_back(std::move(d));
  }
  return gens;
}

}  // namespace hallforge
