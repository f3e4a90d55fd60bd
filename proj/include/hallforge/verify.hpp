// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hallforge/quiver.hpp"
#include "hallforge/repspace.hpp"

namespace hallforge {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kReportSchema = 1;
/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheEnv = "HALLFORGE_CACHE_DIR";

struct RunConfig {
  std::string quiver = "a1";  // preset name or path to a JSON description
  int p = 2;
  DimVector omega;             // empty means all ones
  int max_deg = 3;
  std::vector<int> relations;  // empty means every relation
  std::vector<std::string> suites;  // empty means every suite
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::filesystem::path> report_path;
};

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

/// Fills defaults and checks the prime, omega, degree ceilings and names.
/// Throws ConfigError.
RunConfig validate(RunConfig c);

struct CheckRecord {
  std::string name;
  nlohmann::json params;
  bool pass = true;
  bool skipped = false;
  std::string witness;
  double wall_ms = 0;
};

struct Report {
  nlohmann::json config;
  std::vector<CheckRecord> checks;
  CacheStats cache;

  bool pass() const;
  size_t failures() const;
  /// wall times are left out when with_timing is false, for comparisons.
  nlohmann::json to_json(bool with_timing = true) const;
  std::string summary() const;
};

nlohmann::json config_to_json(const RunConfig& c);

/// Runs the selected suites. A check hitting a size ceiling fails with the
/// error as its witness; the run continues.
Report run(const RunConfig& config);

struct CacheEntry {
  std::filesystem::path path;
  std::string quiver_hash;
  int p = 0;
  DimVector nu;
  std::uintmax_t bytes = 0;
  bool valid = false;
};

std::vector<CacheEntry> cache_inspect(const std::filesystem::path& dir);

struct GcResult {
  size_t removed = 0;
  size_t kept = 0;
  std::uintmax_t bytes_freed = 0;
};

/// Removes corrupt entries and stale temporaries; everything when all is set.
GcResult cache_gc(const std::filesystem::path& dir, bool all = false);

}  // namespace hallforge
