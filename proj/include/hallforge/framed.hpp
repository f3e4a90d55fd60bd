// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "hallforge/fourier.hpp"
#include "hallforge/hall.hpp"
#include "hallforge/scalar_matrix.hpp"

namespace hallforge {

/// Largest quotient dimension handled by the framed engine.
inline constexpr size_t kQuotientCeiling = 512;

/// True when the stacked maps out of i are injective. Requires i to be a source of q.
bool in_locus(const Quiver& q, const Representation& x, int i);

/// F_nu = (invariant functions on E_nu) / N_nu, presented by a coset basis.
struct QuotientSpace {
  DimVector nu_base;
  DimVector nu;           // over all vertices of the framed quiver
  OrbitTablePtr table;    // null when nu has a negative entry
  ScalarMatrix n_basis;   // rows: reduced basis of N over the orbit basis
  std::vector<size_t> pivots;
  std::vector<size_t> coset;   // orbit labels spanning a complement of N
  ScalarMatrix projection;     // dim x orbits
  ScalarMatrix inclusion;      // orbits x dim

  size_t orbit_count() const { return table ? static_cast<size_t>(table->size()) : 0; }
  size_t dim() const { return coset.size(); }
};

/// A vector of F_nu in coset coordinates; nu is a base dimension vector.
struct ModuleVector {
  DimVector nu;
  std::vector<Scalar> coords;
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
  bool is_zero() const;
};

/// One letter of a word acting on the module.
struct Generator {
  enum class Kind { K, K_inv, E_plus, E_minus, scalar };
  Kind kind = Kind::scalar;
  int vertex = 0;
  int n = 1;
  ClassKey cls;
  std::optional<Scalar> value;

  static Generator K(int i) { return {Kind::K, i, 1, {}, std::nullopt}; }
  static Generator K_inv(int i) { return {Kind::K_inv, i, 1, {}, std::nullopt}; }
  static Generator E_plus(int i, int n = 1) { return {Kind::E_plus, i, n, {}, std::nullopt}; }
  static Generator E_minus(const ClassKey& a) { return {Kind::E_minus, 0, 1, a, std::nullopt}; }
  static Generator times(const Scalar& s) { return {Kind::scalar, 0, 1, {}, s}; }
};

struct FramedStats {
  std::uint64_t stability_checks = 0;
  std::uint64_t stability_failures = 0;
  std::uint64_t eminus_cross_checks = 0;
  std::uint64_t well_defined_checks = 0;
};

struct WeightSpace {
  DimVector beta;
  size_t ambient_dim = 0;  // dim F_{omega + beta}
  size_t dim = 0;          // dim of the span of E-_alpha(1_omega)
};

/**
 * The function-space module of a framed quiver at a fixed framing omega.
 *
 * Spaces are indexed by base dimension vectors nu; the full dimension is
 * (nu, omega). Operators are built first on orbit functions, checked to
 * preserve N, and then induced on the quotients.
 */
class FramedContext {
 public:
  /// qhat must be an enlarged quiver without loops.
  FramedContext(Quiver qhat, int p, DimVector omega, bool cross_check = true);

  const Quiver& quiver() const noexcept { return q_; }
  const HallContext& hall() const noexcept { return hall_; }
  const Field& field() const noexcept { return hall_.field(); }
  int prime() const noexcept { return p_; }
  const DimVector& omega() const noexcept { return omega_; }
  int base_count() const noexcept { return q_.base_count(); }
  FramedStats stats() const noexcept { return stats_; }

  DimVector full_dim(const DimVector& nu_base) const;

  /// Rows form a basis of N_{nu,i}.
  ScalarMatrix n_subspace(const DimVector& nu_base, int i) const;
  const QuotientSpace& quotient(const DimVector& nu_base) const;
  /// Same N with pivots chosen over the reversed orbit order.
  QuotientSpace alternative_quotient(const DimVector& nu_base) const;

  /// v^{nubar_i - nu_i} at full dimension.
  Scalar k_scalar(int i, const DimVector& nu_base) const;
  ScalarMatrix K(int i, const DimVector& nu_base, int power = 1) const;

  /// Orbit-level E+_{ni}: functions at nu + n i -> functions at nu.
  const ScalarMatrix& full_eplus(int i, int n, const DimVector& nu_base) const;
  /// Orbit-level E-_alpha by the product route: functions at nu -> nu + alpha.
  const ScalarMatrix& full_eminus(const ClassKey& alpha, const DimVector& nu_base) const;
  /// Orbit-level E-_alpha by enumerating embeddings y directly.
  ScalarMatrix full_eminus_direct(const ClassKey& alpha, const DimVector& nu_base) const;

  /// Induced maps on quotients. Throw ConsistencyError when N is not preserved.
  const ScalarMatrix& eplus(int i, int n, const DimVector& nu_base) const;
  const ScalarMatrix& eminus(const ClassKey& alpha, const DimVector& nu_base) const;

  /// Recomputes an induced map in the alternative coset basis and compares.
  bool eplus_well_defined(int i, int n, const DimVector& nu_base) const;
  bool eminus_well_defined(const ClassKey& alpha, const DimVector& nu_base) const;

  /// The class of the constant function at nu = 0.
  ModuleVector generator() const;
  ModuleVector zero(const DimVector& nu_base) const;
  /// Applies the letters in order, the first letter first.
  ModuleVector act(const std::vector<Generator>& word, ModuleVector f) const;

  /// Weight spaces of the submodule generated by the generator, |beta| <= depth.
  std::vector<WeightSpace> highest_weight_module(int depth) const;

 private:
  QuotientSpace build_quotient(const DimVector& nu_base, bool reversed) const;
  ScalarMatrix eplus_source(const Quiver& qs, int i, int n, const DimVector& nu_base) const;
  ScalarMatrix induce(const ScalarMatrix& full, const QuotientSpace& src, const QuotientSpace& tgt) const;
  bool same_induced(const ScalarMatrix& full, const DimVector& src, const DimVector& tgt) const;

  Quiver q_;
  int p_;
  DimVector omega_;
  bool cross_check_;
  HallContext hall_;

  mutable std::map<DimVector, QuotientSpace> quotients_;
  mutable std::map<std::tuple<int, int, DimVector>, ScalarMatrix> full_eplus_;
  mutable std::map<std::pair<ClassKey, DimVector>, ScalarMatrix> full_eminus_;
  mutable std::map<std::tuple<int, int, DimVector>, ScalarMatrix> eplus_;
  mutable std::map<std::pair<ClassKey, DimVector>, ScalarMatrix> eminus_;
  mutable FramedStats stats_;
};

/// Number of points in one fiber of the map that forgets (x1, y') over a
/// triple (x, x', y''), together with the closed-form prediction
/// v^{-2<i,nu>} |G_mu| g^alpha_{i beta} a_beta / a_alpha.
struct FiberCount {
  std::uint64_t counted = 0;
  Scalar predicted;
  bool integral = false;
  int fibers = 0;  // how many base points were examined
  bool all_equal = false;
};

/// True when S_i is not a direct summand of the class alpha of the plain
/// quiver. S_i is injective at a source, so this is the rank test on the
/// stacked outgoing maps; the closed form below is only claimed in this case.
bool fiber_formula_applies(const Quiver& base, int p, const ClassKey& alpha, int i);

/// Examines up to max_fibers points of the base with x' / Im y'' ~ beta.
/// i must be a source of qhat; alpha is a class of qhat.base() with dimension beta + i.
FiberCount fiber_count(const Quiver& qhat, int p, const DimVector& nu, int i, const ClassKey& alpha,
                       const ClassKey& beta, int max_fibers = 4);

}  // namespace hallforge
