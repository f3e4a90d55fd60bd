// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallforge {

/// Invalid user input or configuration (bad prime, malformed quiver file, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed a hard ceiling. Carries the predicted size.
class ScaleError : public std::runtime_error {
 public:
  ScaleError(const std::string& what, double predicted)
      : std::runtime_error(what + " (predicted " + std::to_string(predicted) + ")"), predicted_(predicted) {}
  double predicted() const noexcept { return predicted_; }

 private:
  double predicted_;
};

/// An internal invariant failed (stale class table, operator not preserving N, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hallforge
