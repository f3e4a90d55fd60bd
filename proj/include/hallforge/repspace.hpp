// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hallforge/gf_matrix.hpp"
#include "hallforge/quiver.hpp"

namespace hallforge {

/// Hard ceiling on |E_nu| for any enumeration.
inline constexpr std::uint64_t kPointCeiling = std::uint64_t{1} << 20;
/// Hard ceiling on the size of an enumerated group.
inline constexpr std::uint64_t kGroupCeiling = 1000000;

/// A point of E_nu: one (dim target) x (dim source) matrix per arrow.
struct Representation {
  DimVector dim;
  std::vector<GFMatrix> mats;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/**
 * Coordinates on E_nu for a fixed quiver, prime and dimension vector.
 *
 * A point is encoded as an integer in base p. The digits run arrow by arrow
 * in arrow order, each matrix row-major; coordinate k has weight p^k. For
 * p = 2 bit k of the index is coordinate k.
 */
class RepSpace {
 public:
  RepSpace(Quiver q, int p, DimVector nu);

  const Quiver& quiver() const noexcept { return q_; }
  int prime() const noexcept { return p_; }
  const DimVector& dim() const noexcept { return nu_; }

  int coordinate_count() const noexcept { return coords_; }
  /// p^coordinate_count; throws ScaleError above kPointCeiling.
  std::uint64_t point_count() const;
  /// Same count without the ceiling check, saturating at UINT64_MAX.
  std::uint64_t predicted_point_count() const;

  int offset(int h) const { return offsets_.at(static_cast<size_t>(h)); }
  int rows(int h) const { return nu_[static_cast<size_t>(q_.arrow(h).target)]; }
  int cols(int h) const { return nu_[static_cast<size_t>(q_.arrow(h).source)]; }

  Representation decode(std::uint64_t index) const;
  /// Extra trailing matrices are accepted when empty, so a quotient with
  /// zero framing part encodes in the plain quiver's space.
  std::uint64_t encode(const Representation& x) const;

  std::vector<int> digits(std::uint64_t index) const;
  std::uint64_t from_digits(const std::vector<int>& digits) const;

 private:
  Quiver q_;
  int p_;
  DimVector nu_;
  std::vector<int> offsets_;
  int coords_ = 0;
};

/// Every point of E_nu once, in index order.
std::vector<Representation> enumerate_points(const Quiver& q, int p, const DimVector& nu);

/// One invertible matrix per base vertex.
using GroupElement = std::vector<GFMatrix>;

/// g.x : x_h -> g_t x_h g_s^{-1}, identity on the frozen (framing) vertices.
Representation act(const Quiver& q, const GroupElement& g, const Representation& x);

/// prod over base vertices of |GL(nu_i, F_p)|.
std::uint64_t group_order(const Quiver& q, int p, const DimVector& nu);

struct IsoClass {
  int label = 0;
  /// Point index of the canonical representative, the smallest in the orbit.
  std::uint64_t rep = 0;
  std::uint64_t aut_order = 1;
  std::uint64_t orbit_size = 1;
};

enum class OrbitStrategy { automatic, full_group, generators };

/// Orbits of G_nu on E_nu. Labels follow the order of canonical representatives.
class OrbitTable {
 public:
  OrbitTable(RepSpace space, std::vector<std::uint32_t> labels, std::vector<IsoClass> classes,
             std::uint64_t group_order);

  const RepSpace& space() const noexcept { return space_; }
  const Quiver& quiver() const noexcept { return space_.quiver(); }
  const DimVector& dim() const noexcept { return space_.dim(); }
  int prime() const noexcept { return space_.prime(); }
  std::uint64_t group_order() const noexcept { return group_order_; }

  int size() const noexcept { return static_cast<int>(classes_.size()); }
  const IsoClass& at(int label) const { return classes_.at(static_cast<size_t>(label)); }
  const std::vector<IsoClass>& classes() const noexcept { return classes_; }
  std::uint64_t point_count() const noexcept { return labels_.size(); }

  int label(std::uint64_t point) const { return static_cast<int>(labels_.at(point)); }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  Representation rep(int label) const { return space_.decode(at(label).rep); }

  /// Label of the class containing x; ConsistencyError when x does not fit.
  int classify(const Representation& x) const;

 private:
  RepSpace space_;
  std::vector<std::uint32_t> labels_;
  std::vector<IsoClass> classes_;
  std::uint64_t group_order_;
};

using OrbitTablePtr = std::shared_ptr<const OrbitTable>;

/// Direct computation, no caching.
OrbitTablePtr compute_orbits(const Quiver& q, int p, const DimVector& nu,
                             OrbitStrategy strategy = OrbitStrategy::automatic);

/// Memoized in process and, when a cache directory is set, on disk.
OrbitTablePtr orbits(const Quiver& q, int p, const DimVector& nu);

/// Disk cache location; std::nullopt disables the disk layer.
void set_cache_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> cache_directory();

struct CacheStats {
  std::uint64_t memory_hits = 0;
  std::uint64_t disk_hits = 0;
  std::uint64_t computed = 0;
  std::uint64_t corrupt = 0;
};
CacheStats cache_stats();
void reset_memory_cache();

/// Cache file for (q, p, nu) under dir.
std::filesystem::path cache_entry_path(const std::filesystem::path& dir, const Quiver& q, int p,
                                       const DimVector& nu);
nlohmann::json orbit_table_to_json(const OrbitTable& t);
/// Checksum test alone, usable without knowing the quiver.
bool cache_checksum_ok(const nlohmann::json& j);
/// Validates structure and checksum; std::nullopt on any mismatch.
std::optional<OrbitTable> orbit_table_from_json(const Quiver& q, int p, const DimVector& nu,
                                                const nlohmann::json& j);

/// Graded subspace given by injective column bases, one n_v x k_v matrix per vertex.
using GradedBasis = std::vector<GFMatrix>;

/// Solves c * r = m for r; std::nullopt when a column of m leaves the span of c.
std::optional<GFMatrix> solve_in_basis(const GFMatrix& c, const GFMatrix& m);
/// True when x_h maps the span at s(h) into the span at t(h) for every arrow.
bool is_stable(const Quiver& q, const Representation& x, const GradedBasis& w);
/// x restricted to the subspace, written in the given bases.
Representation restrict_to(const Quiver& q, const Representation& x, const GradedBasis& w);
/// x on V/W, using the first standard vectors outside W as complement basis.
Representation quotient_by(const Quiver& q, const Representation& x, const GradedBasis& w);
/// All graded subspaces of dimension beta, as column bases from RREF row bases.
std::vector<GradedBasis> enumerate_graded_subspaces(const DimVector& dim, const DimVector& beta, int p);

/// (sub label, quotient label) -> number of x-stable W of dimension beta with those classes.
using Census = std::map<std::pair<int, int>, std::uint64_t>;

/// Subrepresentation census at a point; sub classes in sub_table, quotients in quot_table.
Census subrep_census(const Representation& x, const Quiver& q, const OrbitTable& sub_table,
                     const OrbitTable& quot_table);

/// Census at the canonical representative of a class, memoized.
const Census& class_census(const OrbitTablePtr& gamma, int gamma_label, const DimVector& beta);

/// g^gamma_{alpha beta}: subrepresentations W of V_gamma with W ~ beta and V/W ~ alpha.
std::uint64_t hall_number(const Quiver& q, int p, const DimVector& gamma_dim, int gamma, const DimVector& alpha_dim,
                          int alpha, const DimVector& beta_dim, int beta);

}  // namespace hallforge
