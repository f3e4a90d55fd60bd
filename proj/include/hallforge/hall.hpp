// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <vector>

#include "hallforge/fourier.hpp"
#include "hallforge/repspace.hpp"
#include "hallforge/scalar.hpp"

namespace hallforge {

/// An isomorphism class of the plain quiver: its dimension and orbit label.
struct ClassKey {
  DimVector dim;
  int label = 0;
  auto operator<=>(const ClassKey&) const = default;
};

/// Finite combination of basis elements u_alpha; zero coefficients are pruned.
struct HallElement {
  std::map<ClassKey, Scalar> terms;

  void add(const ClassKey& k, const Scalar& c);
  friend bool operator==(const HallElement&, const HallElement&) = default;
};

enum class Flavor { plus, minus };

/// Basis element K_mu u_alpha of the extended algebra (torus on the left).
struct ExtKey {
  DimVector mu;
  ClassKey cls;
  auto operator<=>(const ExtKey&) const = default;
};

struct ExtendedElement {
  Flavor flavor = Flavor::plus;
  std::map<ExtKey, Scalar> terms;

  void add(const ExtKey& k, const Scalar& c);
  friend bool operator==(const ExtendedElement&, const ExtendedElement&) = default;
};

/// Element of a tensor power of one flavor; keys have one ExtKey per factor.
struct Tensor {
  Flavor flavor = Flavor::plus;
  int arity = 2;
  std::map<std::vector<ExtKey>, Scalar> terms;

  void add(const std::vector<ExtKey>& k, const Scalar& c);
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

/// Hall algebra data of a plain quiver over F_p, with exact coefficients.
class HallContext {
 public:
  HallContext(Quiver q, int p);

  const Quiver& quiver() const noexcept { return q_; }
  int prime() const noexcept { return p_; }
  const Field& field() const noexcept { return field_; }

  OrbitTablePtr classes(const DimVector& d) const;
  std::vector<ClassKey> classes_of_dim(const DimVector& d) const;
  /// All dimension vectors with total dimension at most n.
  std::vector<DimVector> dims_up_to(int n) const;
  std::uint64_t aut(const ClassKey& k) const;
  ClassKey zero_class() const;
  /// Class of the simple representation at vertex i.
  ClassKey simple(int i) const;
  /// Class of the semisimple representation with dimension d.
  ClassKey semisimple(const DimVector& d) const;

  /// g^gamma_{alpha beta}.
  std::uint64_t hall(const ClassKey& gamma, const ClassKey& alpha, const ClassKey& beta) const;

  HallElement one() const;
  HallElement u(const ClassKey& k) const;
  /// Bilinear Hall product; twisted inserts v^{<alpha, beta>}.
  HallElement mul(const HallElement& a, const HallElement& b, bool twisted = true) const;

  ExtendedElement ext(Flavor f, const DimVector& mu, const ClassKey& k) const;
  ExtendedElement K(Flavor f, const DimVector& mu) const;
  /// Straightened product in the K-left basis; flavors must match.
  ExtendedElement ext_mul(const ExtendedElement& a, const ExtendedElement& b) const;
  /// Plus: K_mu u_l -> sum v^{<a,b>} (a_a a_b / a_l) g^l_{ab} K_mu u_a K_b (x) K_mu u_b.
  /// Minus uses K_{-b} in place of K_b.
  Tensor comultiply(const ExtendedElement& a) const;
  /// Applies the coproduct to one tensor slot, raising the arity by one.
  Tensor comultiply_slot(const Tensor& t, int slot) const;
  /// Applies the counit to one tensor slot, lowering the arity by one.
  Tensor counit_slot(const Tensor& t, int slot) const;
  Scalar counit(const ExtendedElement& a) const;
  /// Componentwise product of tensors of equal arity.
  Tensor tensor_mul(const Tensor& a, const Tensor& b) const;
  /// phi(K_mu u+_a, K_nu u-_b) = v^{-(mu,nu)-(a,nu)+(mu,b)} |V_a| / a_a delta_ab.
  Scalar pairing(const ExtendedElement& plus, const ExtendedElement& minus) const;
  /// Pairing of arity-2 tensors, factor by factor.
  Scalar pairing(const Tensor& plus, const Tensor& minus) const;

  /// Tensor with a single slot holding a.
  Tensor as_tensor(const ExtendedElement& a) const;

 private:
  Quiver q_;
  int p_;
  Field field_;
};

/// u_alpha -> v^{dim V_alpha - dim G_alpha} 1_alpha with dim V = sum alpha_i,
/// dim G = sum alpha_i^2. Requires a homogeneous element.
OrbitFunction hall_to_function(const HallContext& ctx, const HallElement& a);

/// Quantum factorial prod_{h<=m} (v^h - v^{-h}) / (v - v^{-1}).
Scalar quantum_factorial(const Field& f, int m);

}  // namespace hallforge
