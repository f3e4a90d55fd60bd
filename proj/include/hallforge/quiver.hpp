// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hallforge {

/// Dimension per vertex, indexed densely. On an enlarged quiver the framing
/// vertex of base vertex i sits at index base_count() + i.
using DimVector = std::vector<int>;

struct Arrow {
  int source = 0;
  int target = 0;
  /// Set when the arrow points against its reference direction. Only the
  /// sign of the Fourier pairing depends on it.
  bool reversed = false;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/**
 * A finite quiver, plain or enlarged.
 *
 * The general linear group acts on the first base_count() vertices only; on
 * an enlarged quiver the remaining vertices are the framing vertices, which
 * stay frozen. Arrows between base vertices come first, then one framing
 * arrow per base vertex.
 */
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> names, std::vector<Arrow> arrows);

  /// Adds a framing vertex and a framing arrow i -> framing(i) per vertex.
  static Quiver enlarge(const Quiver& base);

  int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
  int base_count() const noexcept { return base_count_; }
  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }
  int base_arrow_count() const noexcept { return base_arrows_; }
  bool is_enlarged() const noexcept { return base_count_ != vertex_count(); }

  const Arrow& arrow(int h) const { return arrows_.at(static_cast<size_t>(h)); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::string& name(int v) const { return names_.at(static_cast<size_t>(v)); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  int framing_vertex(int i) const { return base_count_ + i; }
  int framing_arrow(int i) const { return base_arrows_ + i; }

  /// The plain quiver on the base vertices, keeping the current
  /// orientation of the base arrows.
  Quiver base() const;

  /// Vertex index from its name, or from a decimal index string.
  int vertex_index(const std::string& name) const;

  bool has_loops() const;
  /// FNV-1a over the combinatorial data (vertex counts and arrow ends).
  std::uint64_t hash() const;
  std::string hash_hex() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
  friend Quiver reorient(const Quiver& q, const std::vector<int>& flip);

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  int base_count_ = 0;
  int base_arrows_ = 0;
};

/// <a, b> = sum_i a_i b_i - sum_h a_s(h) b_t(h).
int euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
/// (a, b) = <a, b> + <b, a>; independent of orientation.
int symmetric_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// Swaps source and target of the listed arrows and toggles their reversed flag.
Quiver reorient(const Quiver& q, const std::vector<int>& flip);
/// Arrows h with t(h) = i and s(h) != i, in index order.
std::vector<int> arrows_into(const Quiver& q, int i);
bool is_source(const Quiver& q, int i);
/// Flips exactly the arrows into i. Loops at i cannot be removed and are rejected.
Quiver source_orientation(const Quiver& q, int i);
/// Arrow indices whose direction differs between a and b (same underlying graph).
std::vector<int> orientation_difference(const Quiver& a, const Quiver& b);

/// Unit vector at vertex v of q.
DimVector unit(const Quiver& q, int v);
/// Base vector nu over I and framing omega over I, as a vector over all vertices.
DimVector framed_dim(const Quiver& q, const DimVector& nu, const DimVector& omega);
/// Pads a base-vertex vector with zeros up to q's vertex count.
DimVector extend_by_zero(const Quiver& q, const DimVector& a);
/// Sum of the base components.
int base_degree(const Quiver& q, const DimVector& a);
int total_dim(const DimVector& a);
DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);
bool is_nonnegative(const DimVector& a);
std::string dim_to_string(const DimVector& a);
/// Parses "2,1" or "2" into a vector.
DimVector parse_dim(const std::string& text);

/// "a1", "a2" (1 -> 2) and "kronecker" (two arrows 1 -> 2).
Quiver preset_quiver(const std::string& name);
/// {"vertices": [names], "arrows": [[s, t], ...]} with names or indices.
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Quiver& q);
/// A preset name or a path to a JSON description.
Quiver load_quiver(const std::string& spec);

}  // namespace hallforge
