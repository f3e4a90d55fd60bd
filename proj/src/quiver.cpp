// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/quiver.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "hallforge/error.hpp"

namespace hallforge {

Quiver::Quiver(std::vector<std::string> names, std::vector<Arrow> arrows)
    : names_(std::move(names)), arrows_(std::move(arrows)) {
  base_count_ = vertex_count();
  base_arrows_ = arrow_count();
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count() || a.target < 0 || a.target >= vertex_count()) {
      throw ConfigError("arrow endpoint outside the vertex set");
    }
  }
}

Quiver Quiver::enlarge(const Quiver& base) {
  if (base.is_enlarged()) throw ConfigError("quiver is already enlarged");
  Quiver q = base;
  const int n = base.vertex_count();
  for (int i = 0; i < n; ++i) {
    q.names_.push_back(base.name(i) + "^");
    q.arrows_.push_back(Arrow{i, n + i, false});
  }
  q.base_count_ = n;
  q.base_arrows_ = base.arrow_count();
  return q;
}

Quiver Quiver::base() const {
  Quiver q;
  q.names_.assign(names_.begin(), names_.begin() + base_count_);
  q.arrows_.assign(arrows_.begin(), arrows_.begin() + base_arrows_);
  q.base_count_ = base_count_;
  q.base_arrows_ = base_arrows_;
  return q;
}

int Quiver::vertex_index(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (names_[static_cast<size_t>(v)] == name) return v;
  }
  try {
    size_t used = 0;
    const int v = std::stoi(name, &used);
    if (used == name.size() && v >= 0 && v < vertex_count()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("unknown vertex '" + name + "'");
}

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

std::uint64_t Quiver::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int b = 0; b < 8; ++b) {
      h ^= (value >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(vertex_count()));
  mix(static_cast<std::uint64_t>(base_count_));
  mix(static_cast<std::uint64_t>(base_arrows_));
  for (const auto& a : arrows_) {
    mix(static_cast<std::uint64_t>(a.source));
    mix(static_cast<std::uint64_t>(a.target));
  }
  return h;
}

std::string Quiver::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

namespace {

void check_dims(const Quiver& q, const DimVector& a) {
  if (static_cast<int>(a.size()) != q.vertex_count()) {
    throw ConfigError("dimension vector " + dim_to_string(a) + " does not match the vertex count");
  }
}

}  // namespace

int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  check_dims(q, a);
  check_dims(q, b);
  int r = 0;
  for (int i = 0; i < q.vertex_count(); ++i) r += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
  for (const auto& h : q.arrows()) r -= a[static_cast<size_t>(h.source)] * b[static_cast<size_t>(h.target)];
  return r;
}

int symmetric_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

Quiver reorient(const Quiver& q, const std::vector<int>& flip) {
  std::vector<Arrow> arrows = q.arrows();
  for (int h : flip) {
    if (h < 0 || h >= q.arrow_count()) throw ConfigError("flip refers to a missing arrow");
    auto& a = arrows[static_cast<size_t>(h)];
    std::swap(a.source, a.target);
    a.reversed = !a.reversed;
  }
  Quiver r = q;
  r.arrows_ = std::move(arrows);
  return r;
}

std::vector<int> arrows_into(const Quiver& q, int i) {
  std::vector<int> out;
  for (int h = 0; h < q.arrow_count(); ++h) {
    if (q.arrow(h).target == i && q.arrow(h).source != i) out.push_back(h);
  }
  return out;
}

bool is_source(const Quiver& q, int i) {
  for (const auto& a : q.arrows()) {
    if (a.target == i) return false;
  }
  return true;
}

Quiver source_orientation(const Quiver& q, int i) {
  for (const auto& a : q.arrows()) {
    if (a.source == i && a.target == i) throw ConfigError("a vertex with a loop cannot be made a source");
  }
  return reorient(q, arrows_into(q, i));
}

std::vector<int> orientation_difference(const Quiver& a, const Quiver& b) {
  if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count()) {
    throw ConfigError("quivers do not share an underlying graph");
  }
  std::vector<int> out;
  for (int h = 0; h < a.arrow_count(); ++h) {
    const Arrow& x = a.arrow(h);
    const Arrow& y = b.arrow(h);
    if (x.source == y.source && x.target == y.target) continue;
    if (x.source == y.target && x.target == y.source) {
      out.push_back(h);
      continue;
    }
    throw ConfigError("quivers do not share an underlying graph");
  }
  return out;
}

DimVector unit(const Quiver& q, int v) {
  DimVector d(static_cast<size_t>(q.vertex_count()), 0);
  d.at(static_cast<size_t>(v)) = 1;
  return d;
}

DimVector framed_dim(const Quiver& q, const DimVector& nu, const DimVector& omega) {
  if (!q.is_enlarged()) throw ConfigError("framed_dim needs an enlarged quiver");
  if (static_cast<int>(nu.size()) != q.base_count() || static_cast<int>(omega.size()) != q.base_count()) {
    throw ConfigError("base and framing vectors must have one entry per base vertex");
  }
  DimVector d = nu;
  d.insert(d.end(), omega.begin(), omega.end());
  return d;
}

DimVector extend_by_zero(const Quiver& q, const DimVector& a) {
  if (static_cast<int>(a.size()) > q.vertex_count()) throw ConfigError("dimension vector too long");
  DimVector d = a;
  d.resize(static_cast<size_t>(q.vertex_count()), 0);
  return d;
}

int base_degree(const Quiver& q, const DimVector& a) {
  int s = 0;
  for (int i = 0; i < q.base_count() && i < static_cast<int>(a.size()); ++i) s += a[static_cast<size_t>(i)];
  return s;
}

int total_dim(const DimVector& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw ConfigError("dimension vectors of different length");
  DimVector r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw ConfigError("dimension vectors of different length");
  DimVector r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

bool is_nonnegative(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

std::string dim_to_string(const DimVector& a) {
  std::string s;
  for (size_t k = 0; k < a.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(a[k]);
  }
  return s;
}

DimVector parse_dim(const std::string& text) {
  DimVector d;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      const int x = std::stoi(part, &used);
      if (used != part.size() || x < 0) throw ConfigError("bad dimension entry '" + part + "'");
      d.push_back(x);
    } catch (const std::logic_error&) {
      throw ConfigError("bad dimension entry '" + part + "'");
    }
  }
  if (d.empty()) throw ConfigError("empty dimension vector");
  return d;
}

Quiver preset_quiver(const std::string& name) {
  if (name == "a1") return Quiver({"1"}, {});
  if (name == "a2") return Quiver({"1", "2"}, {Arrow{0, 1, false}});
  if (name == "kronecker") return Quiver({"1", "2"}, {Arrow{0, 1, false}, Arrow{0, 1, false}});
  throw ConfigError("unknown quiver preset '" + name + "'");
}

Quiver quiver_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw ConfigError("quiver description needs a 'vertices' array");
  }
  std::vector<std::string> names;
  for (const auto& v : j["vertices"]) {
    names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  Quiver probe(names, {});
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2) throw ConfigError("each arrow must be a [source, target] pair");
      auto end = [&](const nlohmann::json& e) {
        if (e.is_number_integer()) {
          const int v = e.get<int>();
          if (v < 0 || v >= probe.vertex_count()) throw ConfigError("arrow endpoint outside the vertex set");
          return v;
        }
        if (e.is_string()) return probe.vertex_index(e.get<std::string>());
        throw ConfigError("arrow endpoint must be a name or an index");
      };
      arrows.push_back(Arrow{end(a[0]), end(a[1]), false});
    }
  }
  return Quiver(std::move(names), std::move(arrows));
}

nlohmann::json to_json(const Quiver& q) {
  nlohmann::json j;
  j["vertices"] = q.names();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) j["arrows"].push_back({a.source, a.target});
  j["base_count"] = q.base_count();
  return j;
}

Quiver load_quiver(const std::string& spec) {
  if (spec == "a1" || spec == "a2" || spec == "kronecker") return preset_quiver(spec);
  std::ifstream in(spec);
  if (!in) throw ConfigError("cannot open quiver file '" + spec + "'");
  try {
    return quiver_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed quiver file: ") + e.what());
  }
}

}  // namespace hallforge
