// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace hallforge {

class FieldContext;
using Field = std::shared_ptr<const FieldContext>;

/**
 * Exact element of the cyclotomic field Q(zeta_n), n = 4p.
 *
 * Stored in the power basis 1, zeta, ..., zeta^(phi(n)-1), always reduced
 * modulo the n-th cyclotomic polynomial. Coefficients are arbitrary
 * precision rationals. A default-constructed Scalar has no field and may
 * only be assigned to.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, std::vector<mpq_class> coeffs);

  const Field& field() const noexcept { return field_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  bool valid() const noexcept { return field_ != nullptr; }

  bool is_zero() const;
  /// True when every coefficient except the constant one vanishes.
  bool is_rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
  Scalar& operator*=(const mpq_class& q);

  Scalar operator-() const;
  Scalar inv() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const mpq_class& q) { return a *= q; }
  friend Scalar operator*(const mpq_class& q, Scalar a) { return a *= q; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human readable form, e.g. "1/2*z^2 - z" with z the primitive n-th root.
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Read-only description of Q(zeta_{4p}); build with make_field().
class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  int prime() const noexcept { return p_; }
  int conductor() const noexcept { return n_; }
  /// phi(n), the dimension of the power basis.
  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }
  /// Cyclotomic polynomial coefficients, constant term first, monic.
  const std::vector<long>& modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long k) const;
  Scalar rational(const mpq_class& q) const;
  /// zeta_n^k for any integer k.
  Scalar zeta(long k) const;
  /// The additive character value zeta_p^r.
  Scalar zeta_p(long r) const { return zeta(4 * mod(r, p_)); }
  /// The distinguished square root of p.
  const Scalar& v() const noexcept { return v_; }
  /// v^k for any integer k, computed as p^floor(k/2) * v^(k mod 2).
  Scalar v_pow(long k) const;

  /// Coefficients of zeta^k reduced, for 0 <= k < 2n (internal use by Scalar).
  const std::vector<std::vector<long>>& power_table() const noexcept { return powers_; }

 private:
  friend Field make_field(int p);
  explicit FieldContext(int p);
  void finish();
  static long mod(long a, long m) { return ((a % m) + m) % m; }

  int p_ = 0;
  int n_ = 0;
  std::vector<long> modulus_;
  std::vector<std::vector<long>> powers_;
  Scalar v_;
};

bool is_prime(long p);

/// Builds the field Q(zeta_{4p}); rejects non-prime p with ConfigError.
Field make_field(int p);

/// Interpret a Scalar serialized as {"conductor": n, "coeffs": ["num/den", ...]}.
nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const Field& field, const nlohmann::json& j);

}  // namespace hallforge
