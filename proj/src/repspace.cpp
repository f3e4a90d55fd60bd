// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/repspace.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "hallforge/error.hpp"
#include "hallforge/kernels.hpp"

namespace hallforge {

namespace {

std::uint64_t saturating_pow(int p, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) {
    if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= static_cast<std::uint64_t>(p);
  }
  return r;
}

std::string key_of(const Quiver& q, int p, const DimVector& nu) {
  return q.hash_hex() + "/" + std::to_string(p) + "/" + dim_to_string(nu);
}

}  // namespace

RepSpace::RepSpace(Quiver q, int p, DimVector nu) : q_(std::move(q)), p_(p), nu_(std::move(nu)) {
  if (static_cast<int>(nu_.size()) != q_.vertex_count()) {
    throw ConfigError("dimension vector " + dim_to_string(nu_) + " does not match the quiver");
  }
  if (!is_nonnegative(nu_)) throw ConfigError("negative dimension vector " + dim_to_string(nu_));
  for (int h = 0; h < q_.arrow_count(); ++h) {
    offsets_.push_back(coords_);
    coords_ += rows(h) * cols(h);
  }
}

std::uint64_t RepSpace::predicted_point_count() const { return saturating_pow(p_, coords_); }

std::uint64_t RepSpace::point_count() const {
  const std::uint64_t n = predicted_point_count();
  if (n > kPointCeiling) {
    throw ScaleError("E_" + dim_to_string(nu_) + " has more points than the ceiling", static_cast<double>(n));
  }
  return n;
}

std::vector<int> RepSpace::digits(std::uint64_t index) const {
  std::vector<int> d(static_cast<size_t>(coords_));
  for (int k = 0; k < coords_; ++k) {
    d[static_cast<size_t>(k)] = static_cast<int>(index % static_cast<std::uint64_t>(p_));
    index /= static_cast<std::uint64_t>(p_);
  }
  return d;
}

std::uint64_t RepSpace::from_digits(const std::vector<int>& digits) const {
  std::uint64_t idx = 0;
  for (int k = coords_; k-- > 0;) idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(digits[static_cast<size_t>(k)]);
  return idx;
}

Representation RepSpace::decode(std::uint64_t index) const {
  const auto d = digits(index);
  Representation x;
  x.dim = nu_;
  for (int h = 0; h < q_.arrow_count(); ++h) {
    const int r = rows(h);
    const int c = cols(h);
    std::vector<int> e(d.begin() + offset(h), d.begin() + offset(h) + r * c);
    x.mats.emplace_back(p_, r, c, std::move(e));
  }
  return x;
}

std::uint64_t RepSpace::encode(const Representation& x) const {
  if (x.mats.size() < static_cast<size_t>(q_.arrow_count())) throw ConsistencyError("representation has too few arrows");
  std::vector<int> d(static_cast<size_t>(coords_));
  for (int h = 0; h < q_.arrow_count(); ++h) {
    const GFMatrix& m = x.mats[static_cast<size_t>(h)];
    if (m.rows() != rows(h) || m.cols() != cols(h)) throw ConsistencyError("representation shape does not fit E_nu");
    std::copy(m.entries().begin(), m.entries().end(), d.begin() + offset(h));
  }
  for (size_t h = static_cast<size_t>(q_.arrow_count()); h < x.mats.size(); ++h) {
    if (x.mats[h].rows() * x.mats[h].cols() != 0) throw ConsistencyError("extra arrow carries data");
  }
  return from_digits(d);
}

std::vector<Representation> enumerate_points(const Quiver& q, int p, const DimVector& nu) {
  RepSpace sp(q, p, nu);
  const std::uint64_t n = sp.point_count();
  std::vector<Representation> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(sp.decode(k));
  return out;
}

Representation act(const Quiver& q, const GroupElement& g, const Representation& x) {
  if (static_cast<int>(g.size()) != q.base_count()) throw ConsistencyError("group element has wrong arity");
  std::vector<GFMatrix> inv;
  inv.reserve(g.size());
  for (const auto& m : g) inv.push_back(inverse(m));
  Representation y;
  y.dim = x.dim;
  for (int h = 0; h < q.arrow_count(); ++h) {
    const Arrow& a = q.arrow(h);
    GFMatrix m = x.mats[static_cast<size_t>(h)];
    if (a.target < q.base_count()) m = g[static_cast<size_t>(a.target)] * m;
    if (a.source < q.base_count()) m = m * inv[static_cast<size_t>(a.source)];
    y.mats.push_back(std::move(m));
  }
  return y;
}

std::uint64_t group_order(const Quiver& q, int p, const DimVector& nu) {
  std::uint64_t r = 1;
  for (int i = 0; i < q.base_count(); ++i) r *= gl_order(nu[static_cast<size_t>(i)], p);
  return r;
}

OrbitTable::OrbitTable(RepSpace space, std::vector<std::uint32_t> labels, std::vector<IsoClass> classes,
                       std::uint64_t group_order)
    : space_(std::move(space)), labels_(std::move(labels)), classes_(std::move(classes)), group_order_(group_order) {}

int OrbitTable::classify(const Representation& x) const {
  const DimVector& d = dim();
  if (x.dim.size() < d.size()) throw ConsistencyError("representation does not fit the class table");
  for (size_t k = 0; k < x.dim.size(); ++k) {
    const int want = k < d.size() ? d[k] : 0;
    if (x.dim[k] != want) throw ConsistencyError("representation dimension differs from the class table");
  }
  const std::uint64_t idx = space_.encode(x);
  if (idx >= labels_.size()) throw ConsistencyError("point outside a stale class table");
  return label(idx);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint64_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }
  std::uint32_t find(std::uint32_t a) {
    std::uint32_t r = a;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[a] != r) {
      const std::uint32_t next = parent_[a];
      parent_[a] = r;
      a = next;
    }
    return r;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as root; not required, but keeps trees shallow.
    if (a < b) parent_[b] = a; else parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Digits of g.e_k for every coordinate basis vector e_k.
std::vector<std::vector<int>> action_columns(const RepSpace& sp, const GroupElement& g) {
  std::vector<std::vector<int>> cols;
  const int n = sp.coordinate_count();
  std::vector<int> d(static_cast<size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    d.assign(static_cast<size_t>(n), 0);
    d[static_cast<size_t>(k)] = 1;
    const Representation y = act(sp.quiver(), g, sp.decode(sp.from_digits(d)));
    cols.push_back(sp.digits(sp.encode(y)));
  }
  return cols;
}

void unite_under(const RepSpace& sp, const GroupElement& g, UnionFind& uf, std::uint64_t n,
                 std::vector<std::uint64_t>& scratch_in, std::vector<std::uint64_t>& scratch_out) {
  const auto cols = action_columns(sp, g);
  const int p = sp.prime();
  const int nc = sp.coordinate_count();
  if (p == 2) {
    std::vector<std::uint64_t> masks(static_cast<size_t>(nc));
    for (int k = 0; k < nc; ++k) {
      std::uint64_t m = 0;
      for (int j = 0; j < nc; ++j) {
        if (cols[static_cast<size_t>(k)][static_cast<size_t>(j)]) m |= std::uint64_t{1} << j;
      }
      masks[static_cast<size_t>(k)] = m;
    }
    kernels::gf2_apply(masks.data(), nc, scratch_in.data(), scratch_out.data(), n);
    for (std::uint64_t x = 0; x < n; ++x) uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(scratch_out[x]));
    return;
  }
  std::vector<int> d(static_cast<size_t>(nc), 0);
  std::vector<int> img(static_cast<size_t>(nc));
  for (std::uint64_t x = 0; x < n; ++x) {
    std::fill(img.begin(), img.end(), 0);
    for (int k = 0; k < nc; ++k) {
      const int c = d[static_cast<size_t>(k)];
      if (c == 0) continue;
      const auto& col = cols[static_cast<size_t>(k)];
      for (int j = 0; j < nc; ++j) img[static_cast<size_t>(j)] += c * col[static_cast<size_t>(j)];
    }
    for (auto& e : img) e %= p;
    uf.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(sp.from_digits(img)));
    // Advance the odometer to x + 1.
    for (int k = 0; k < nc; ++k) {
      if (++d[static_cast<size_t>(k)] < p) break;
      d[static_cast<size_t>(k)] = 0;
    }
  }
}

GroupElement identity_element(const Quiver& q, int p, const DimVector& nu) {
  GroupElement g;
  for (int i = 0; i < q.base_count(); ++i) g.push_back(GFMatrix::identity(p, nu[static_cast<size_t>(i)]));
  return g;
}

}  // namespace

OrbitTablePtr compute_orbits(const Quiver& q, int p, const DimVector& nu, OrbitStrategy strategy) {
  RepSpace sp(q, p, nu);
  const std::uint64_t n = sp.point_count();
  const std::uint64_t gorder = group_order(q, p, nu);

  bool enumerable = gorder <= kGroupCeiling;
  for (int i = 0; i < q.base_count(); ++i) {
    if (nu[static_cast<size_t>(i)] > default_gl_bound(p)) enumerable = false;
  }
  if (strategy == OrbitStrategy::automatic) {
    const bool small = gorder <= 10000 && gorder * n <= (std::uint64_t{1} << 26);
    strategy = (enumerable && small) ? OrbitStrategy::full_group : OrbitStrategy::generators;
  }
  if (strategy == OrbitStrategy::full_group && !enumerable) {
    throw ScaleError("group G_" + dim_to_string(nu) + " is too large to enumerate", static_cast<double>(gorder));
  }

  UnionFind uf(n);
  std::vector<std::uint64_t> in(n);
  std::vector<std::uint64_t> out(n);
  std::iota(in.begin(), in.end(), 0ULL);

  if (strategy == OrbitStrategy::generators) {
    for (int i = 0; i < q.base_count(); ++i) {
      for (const auto& gen : gl_generators(nu[static_cast<size_t>(i)], p)) {
        GroupElement g = identity_element(q, p, nu);
        g[static_cast<size_t>(i)] = gen;
        unite_under(sp, g, uf, n, in, out);
      }
    }
  } else {
    std::vector<std::vector<GFMatrix>> per_vertex;
    for (int i = 0; i < q.base_count(); ++i) per_vertex.push_back(enumerate_invertible(nu[static_cast<size_t>(i)], p));
    std::vector<size_t> pos(per_vertex.size(), 0);
    while (true) {
      GroupElement g;
      for (size_t i = 0; i < per_vertex.size(); ++i) g.push_back(per_vertex[i][pos[i]]);
      unite_under(sp, g, uf, n, in, out);
      size_t i = 0;
      for (; i < pos.size(); ++i) {
        if (++pos[i] < per_vertex[i].size()) break;
        pos[i] = 0;
      }
      if (i == pos.size()) break;
    }
  }

  std::vector<std::uint32_t> labels(n);
  std::vector<std::int64_t> class_of_root(n, -1);
  std::vector<IsoClass> classes;
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint32_t r = uf.find(static_cast<std::uint32_t>(x));
    if (class_of_root[r] < 0) {
      class_of_root[r] = static_cast<std::int64_t>(classes.size());
      IsoClass c;
      c.label = static_cast<int>(classes.size());
      c.rep = x;
      c.orbit_size = 0;
      classes.push_back(c);
    }
    const auto c = static_cast<size_t>(class_of_root[r]);
    labels[x] = static_cast<std::uint32_t>(c);
    ++classes[c].orbit_size;
  }
  for (auto& c : classes) {
    if (gorder % c.orbit_size != 0) throw ConsistencyError("orbit size does not divide the group order");
    c.aut_order = gorder / c.orbit_size;
  }
  return std::make_shared<const OrbitTable>(std::move(sp), std::move(labels), std::move(classes), gorder);
}

namespace {

struct CacheState {
  std::mutex mu;
  std::unordered_map<std::string, OrbitTablePtr> memo;
  std::optional<std::filesystem::path> dir;
  CacheStats stats;
  std::mutex write_mu;
};

CacheState& cache_state() {
  static CacheState s;
  return s;
}

std::string checksum_of(const nlohmann::json& body) {
  const std::string text = body.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_entry(const std::filesystem::path& path, const nlohmann::json& j) {
  std::lock_guard<std::mutex> lock(cache_state().write_mu);
  std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << j.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

void set_cache_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard<std::mutex> lock(cache_state().mu);
  cache_state().dir = std::move(dir);
}

std::optional<std::filesystem::path> cache_directory() {
  std::lock_guard<std::mutex> lock(cache_state().mu);
  return cache_state().dir;
}

CacheStats cache_stats() {
  std::lock_guard<std::mutex> lock(cache_state().mu);
  return cache_state().stats;
}

void reset_memory_cache() {
  std::lock_guard<std::mutex> lock(cache_state().mu);
  cache_state().memo.clear();
  cache_state().stats = CacheStats{};
}

std::filesystem::path cache_entry_path(const std::filesystem::path& dir, const Quiver& q, int p,
                                       const DimVector& nu) {
  std::string name = dim_to_string(nu);
  for (auto& c : name) {
    if (c == ',') c = '_';
  }
  return dir / q.hash_hex() / std::to_string(p) / (name + ".json");
}

nlohmann::json orbit_table_to_json(const OrbitTable& t) {
  nlohmann::json body;
  body["schema"] = 1;
  body["quiver_hash"] = t.quiver().hash_hex();
  body["p"] = t.prime();
  body["nu"] = t.dim();
  body["group_order"] = t.group_order();
  body["classes"] = nlohmann::json::array();
  for (const auto& c : t.classes()) body["classes"].push_back({c.rep, c.aut_order, c.orbit_size});
  body["labels"] = t.labels();
  nlohmann::json j = body;
  j["checksum"] = checksum_of(body);
  return j;
}

bool cache_checksum_ok(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("checksum") || !j["checksum"].is_string()) return false;
  nlohmann::json body = j;
  body.erase("checksum");
  return checksum_of(body) == j["checksum"].get<std::string>();
}

std::optional<OrbitTable> orbit_table_from_json(const Quiver& q, int p, const DimVector& nu,
                                                const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("checksum")) return std::nullopt;
    nlohmann::json body = j;
    body.erase("checksum");
    if (checksum_of(body) != j["checksum"].get<std::string>()) return std::nullopt;
    if (body["quiver_hash"].get<std::string>() != q.hash_hex() || body["p"].get<int>() != p ||
        body["nu"].get<DimVector>() != nu) {
      return std::nullopt;
    }
    RepSpace sp(q, p, nu);
    const std::uint64_t n = sp.point_count();
    auto labels = body["labels"].get<std::vector<std::uint32_t>>();
    if (labels.size() != n) return std::nullopt;
    std::vector<IsoClass> classes;
    std::uint64_t total = 0;
    const std::uint64_t gorder = body["group_order"].get<std::uint64_t>();
    if (gorder != group_order(q, p, nu)) return std::nullopt;
    for (const auto& c : body["classes"]) {
      IsoClass k;
      k.label = static_cast<int>(classes.size());
      k.rep = c.at(0).get<std::uint64_t>();
      k.aut_order = c.at(1).get<std::uint64_t>();
      k.orbit_size = c.at(2).get<std::uint64_t>();
      if (k.rep >= n || labels[k.rep] != static_cast<std::uint32_t>(k.label)) return std::nullopt;
      if (k.aut_order * k.orbit_size != gorder) return std::nullopt;
      total += k.orbit_size;
      classes.push_back(k);
    }
    if (total != n) return std::nullopt;
    for (auto l : labels) {
      if (l >= classes.size()) return std::nullopt;
    }
    return OrbitTable(std::move(sp), std::move(labels), std::move(classes), gorder);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

OrbitTablePtr orbits(const Quiver& q, int p, const DimVector& nu) {
  const std::string key = key_of(q, p, nu);
  std::optional<std::filesystem::path> dir;
  {
    auto& s = cache_state();
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.memo.find(key);
    if (it != s.memo.end()) {
      ++s.stats.memory_hits;
      return it->second;
    }
    dir = s.dir;
  }
  OrbitTablePtr table;
  bool from_disk = false;
  bool corrupt = false;
  if (dir) {
    const auto path = cache_entry_path(*dir, q, p, nu);
    std::ifstream in(path);
    if (in) {
      nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
      auto t = orbit_table_from_json(q, p, nu, j);
      if (t) {
        table = std::make_shared<const OrbitTable>(std::move(*t));
        from_disk = true;
      } else {
        corrupt = true;
      }
    }
  }
  if (!table) {
    table = compute_orbits(q, p, nu);
    if (dir) write_entry(cache_entry_path(*dir, q, p, nu), orbit_table_to_json(*table));
  }
  auto& s = cache_state();
  std::lock_guard<std::mutex> lock(s.mu);
  if (corrupt) ++s.stats.corrupt;
  if (from_disk) ++s.stats.disk_hits; else ++s.stats.computed;
  auto [it, inserted] = s.memo.emplace(key, table);
  return it->second;
}

std::optional<GFMatrix> solve_in_basis(const GFMatrix& c, const GFMatrix& m) {
  if (c.rows() != m.rows()) throw ConsistencyError("solve_in_basis row mismatch");
  const int k = c.cols();
  GFMatrix aug = hconcat(c, m);
  const auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < k) throw ConsistencyError("basis matrix is not injective");
  for (int r = 0; r < static_cast<int>(piv.size()); ++r) {
    if (r < k && piv[static_cast<size_t>(r)] != r) throw ConsistencyError("basis matrix is not injective");
    if (r >= k) return std::nullopt;
  }
  GFMatrix out(c.prime(), k, m.cols());
  for (int r = 0; r < k; ++r) {
    for (int j = 0; j < m.cols(); ++j) out.set(r, j, aug.at(r, k + j));
  }
  return out;
}

bool is_stable(const Quiver& q, const Representation& x, const GradedBasis& w) {
  for (int h = 0; h < q.arrow_count(); ++h) {
    const Arrow& a = q.arrow(h);
    const auto& ws = w[static_cast<size_t>(a.source)];
    if (ws.cols() == 0) continue;
    if (!solve_in_basis(w[static_cast<size_t>(a.target)], x.mats[static_cast<size_t>(h)] * ws)) return false;
  }
  return true;
}

Representation restrict_to(const Quiver& q, const Representation& x, const GradedBasis& w) {
  Representation r;
  for (const auto& b : w) r.dim.push_back(b.cols());
  for (int h = 0; h < q.arrow_count(); ++h) {
    const Arrow& a = q.arrow(h);
    auto sol = solve_in_basis(w[static_cast<size_t>(a.target)], x.mats[static_cast<size_t>(h)] * w[static_cast<size_t>(a.source)]);
    if (!sol) throw ConsistencyError("subspace is not stable under the representation");
    r.mats.push_back(std::move(*sol));
  }
  return r;
}

namespace {

struct Complement {
  GFMatrix inclusion;   // n x (n-k)
  GFMatrix projection;  // (n-k) x n
};

Complement complement_of(const GFMatrix& c) {
  const int n = c.rows();
  const int k = c.cols();
  const int p = c.prime();
  GFMatrix cur = c;
  int rank = k;
  std::vector<int> chosen;
  for (int e = 0; e < n && rank < n; ++e) {
    GFMatrix unit_col(p, n, 1);
    unit_col.set(e, 0, 1);
    GFMatrix ext = hconcat(cur, unit_col);
    if (mat_rank(ext) > rank) {
      cur = std::move(ext);
      ++rank;
      chosen.push_back(e);
    }
  }
  GFMatrix d(p, n, n - k);
  for (int j = 0; j < n - k; ++j) d.set(chosen[static_cast<size_t>(j)], j, 1);
  const GFMatrix t = inverse(cur);
  GFMatrix pr(p, n - k, n);
  for (int r = 0; r < n - k; ++r) {
    for (int j = 0; j < n; ++j) pr.set(r, j, t.at(k + r, j));
  }
  return {std::move(d), std::move(pr)};
}

}  // namespace

Representation quotient_by(const Quiver& q, const Representation& x, const GradedBasis& w) {
  std::vector<Complement> comp;
  Representation r;
  for (const auto& b : w) {
    comp.push_back(complement_of(b));
    r.dim.push_back(b.rows() - b.cols());
  }
  for (int h = 0; h < q.arrow_count(); ++h) {
    const Arrow& a = q.arrow(h);
    r.mats.push_back(comp[static_cast<size_t>(a.target)].projection * x.mats[static_cast<size_t>(h)] *
                     comp[static_cast<size_t>(a.source)].inclusion);
  }
  return r;
}

std::vector<GradedBasis> enumerate_graded_subspaces(const DimVector& dim, const DimVector& beta, int p) {
  std::vector<GradedBasis> out;
  if (dim.size() != beta.size()) throw ConsistencyError("graded subspace dimension mismatch");
  std::vector<std::vector<GFMatrix>> per_vertex;
  for (size_t v = 0; v < dim.size(); ++v) {
    if (beta[v] < 0 || beta[v] > dim[v]) return out;
    std::vector<GFMatrix> cols;
    for (const auto& rows : enumerate_subspaces(dim[v], beta[v], p)) cols.push_back(rows.transpose());
    per_vertex.push_back(std::move(cols));
  }
  std::vector<size_t> pos(per_vertex.size(), 0);
  while (true) {
    GradedBasis w;
    for (size_t v = 0; v < per_vertex.size(); ++v) w.push_back(per_vertex[v][pos[v]]);
    out.push_back(std::move(w));
    size_t v = 0;
    for (; v < pos.size(); ++v) {
      if (++pos[v] < per_vertex[v].size()) break;
      pos[v] = 0;
    }
    if (v == pos.size()) break;
  }
  return out;
}

Census subrep_census(const Representation& x, const Quiver& q, const OrbitTable& sub_table,
                     const OrbitTable& quot_table) {
  Census census;
  DimVector beta = sub_table.dim();
  beta.resize(x.dim.size(), 0);
  for (const auto& w : enumerate_graded_subspaces(x.dim, beta, sub_table.prime())) {
    if (!is_stable(q, x, w)) continue;
    const int s = sub_table.classify(restrict_to(q, x, w));
    const int t = quot_table.classify(quotient_by(q, x, w));
    ++census[{s, t}];
  }
  return census;
}

const Census& class_census(const OrbitTablePtr& gamma, int gamma_label, const DimVector& beta) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::unique_ptr<Census>> memo;
  const Quiver& q = gamma->quiver();
  const std::string key = key_of(q, gamma->prime(), gamma->dim()) + "#" + std::to_string(gamma_label) + "/" +
                          dim_to_string(beta);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
  }
  const DimVector quot = gamma->dim() - beta;
  auto sub_t = orbits(q, gamma->prime(), beta);
  auto quot_t = orbits(q, gamma->prime(), quot);
  auto c = std::make_unique<Census>(subrep_census(gamma->rep(gamma_label), q, *sub_t, *quot_t));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = memo.emplace(key, std::move(c));
  return *it->second;
}

std::uint64_t hall_number(const Quiver& q, int p, const DimVector& gamma_dim, int gamma, const DimVector& alpha_dim,
                          int alpha, const DimVector& beta_dim, int beta) {
  if (gamma_dim != alpha_dim + beta_dim) throw ConfigError("Hall number needs dim gamma = dim alpha + dim beta");
  const auto t = orbits(q, p, gamma_dim);
  const Census& c = class_census(t, gamma, beta_dim);
  auto it = c.find({beta, alpha});
  return it == c.end() ? 0 : it->second;
}

}  // namespace hallforge
