// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hallforge/framed.hpp"

namespace hallforge {

/// Relation ids: 1 torus, 2 K with E+, 3 K with E-, 4 Serre for E+,
/// 5 E- products, 6 E- E+ commutator. kSimpleCommutator is the alpha = i
/// closed form v^2/(v^2-1) (K - K^{-1}).
inline constexpr int kSimpleCommutator = 7;

struct RelationInstance {
  nlohmann::json params;
  size_t rows = 0;
  size_t cols = 0;
  bool pass = true;
  std::string witness;
};

struct RelationReport {
  int id = 0;
  std::string name;
  std::vector<RelationInstance> instances;
  bool pass() const;
  size_t failures() const;
};

std::string relation_name(int id);

/// Builds both sides on every weight space with |nu|_I <= max_deg such that
/// every space the identity touches also has |.|_I <= max_deg. Spaces with a
/// negative entry are zero.
RelationReport check_relation(const FramedContext& ctx, int id, int max_deg);

/// All base dimension vectors with total dimension at most n.
std::vector<DimVector> base_dims_up_to(const FramedContext& ctx, int n);

/// Product E+_i at nu, E+_i at nu + i, ..., k factors: F_{nu + k i} -> F_nu.
ScalarMatrix eplus_power(const FramedContext& ctx, int i, int k, const DimVector& nu);

}  // namespace hallforge
