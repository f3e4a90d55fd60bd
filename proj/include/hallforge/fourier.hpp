// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hallforge/repspace.hpp"
#include "hallforge/scalar.hpp"
#include "hallforge/scalar_matrix.hpp"

namespace hallforge {

/// A G_nu-invariant function on E_nu, one value per orbit label.
struct OrbitFunction {
  OrbitTablePtr table;
  std::vector<Scalar> values;

  const Quiver& quiver() const { return table->quiver(); }
  const DimVector& dim() const { return table->dim(); }
  const Field& field() const { return values.front().field(); }
  Scalar at_point(std::uint64_t point) const { return values[static_cast<size_t>(table->label(point))]; }

  static OrbitFunction zero(OrbitTablePtr table, const Field& field);
  static OrbitFunction constant(OrbitTablePtr table, const Scalar& value);
  /// 1 on the orbit with this label, 0 elsewhere.
  static OrbitFunction indicator(OrbitTablePtr table, int label, const Field& field);

  OrbitFunction& operator+=(const OrbitFunction& o);
  OrbitFunction& operator-=(const OrbitFunction& o);
  OrbitFunction scaled(const Scalar& s) const;
  friend OrbitFunction operator+(OrbitFunction a, const OrbitFunction& b) { return a += b; }
  friend OrbitFunction operator-(OrbitFunction a, const OrbitFunction& b) { return a -= b; }
  friend bool operator==(const OrbitFunction& a, const OrbitFunction& b);
  bool is_zero() const;
};

/// m_{a,b} = sum_h a_s(h) b_t(h) + sum_i a_i b_i, over all arrows of q.
int m_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// Induction product. f2 lives on E_beta of a quiver q (plain or enlarged);
/// f1 lives on E_alpha of q or of q.base(), with alpha zero on frozen vertices.
/// (f1 * f2)(x) = v^{-m} sum over x-stable W of dim beta of f1(x on V/W) f2(x on W).
OrbitFunction fn_mul(const OrbitFunction& f1, const OrbitFunction& f2);

/// Matrix of the Fourier transform from orbit functions on E_nu(q) to
/// orbit functions on E_nu(reorient(q, flip)):
///   Phi(f)(z, y') = v^{-d} sum_y psi(sum_h eps_h tr(y'_h y_h)) f(z, y),
/// d = sum over flipped h of nu_s nu_t, eps_h = -1 when h is reversed in q.
ScalarMatrix fourier_matrix(const Quiver& q, int p, const DimVector& nu, const std::vector<int>& flip,
                            const Field& field);
/// The transform of f onto reorient(f.quiver(), flip).
OrbitFunction fourier(const OrbitFunction& f, const std::vector<int>& flip);
/// Transform from q to target, which must share q's underlying graph.
ScalarMatrix fourier_between(const Quiver& q, const Quiver& target, int p, const DimVector& nu, const Field& field);

/// Values of the transform at every point of the target space, computed
/// without orbit collapsing. Used to confirm the output is invariant.
std::vector<Scalar> fourier_pointwise(const OrbitFunction& f, const std::vector<int>& flip);
/// True when the pointwise values are constant on every orbit of table.
bool is_invariant(const OrbitTable& table, const std::vector<Scalar>& values);

}  // namespace hallforge
