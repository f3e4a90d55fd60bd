// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/fourier.hpp"

#include <algorithm>

#include "hallforge/error.hpp"
#include "hallforge/kernels.hpp"

namespace hallforge {

OrbitFunction OrbitFunction::zero(OrbitTablePtr table, const Field& field) {
  OrbitFunction f;
  f.values.assign(static_cast<size_t>(table->size()), field->zero());
  f.table = std::move(table);
  return f;
}

OrbitFunction OrbitFunction::constant(OrbitTablePtr table, const Scalar& value) {
  OrbitFunction f;
  f.values.assign(static_cast<size_t>(table->size()), value);
  f.table = std::move(table);
  return f;
}

OrbitFunction OrbitFunction::indicator(OrbitTablePtr table, int label, const Field& field) {
  OrbitFunction f = zero(std::move(table), field);
  f.values.at(static_cast<size_t>(label)) = field->one();
  return f;
}

namespace {

void check_same_space(const OrbitFunction& a, const OrbitFunction& b) {
  if (a.table != b.table && (a.quiver() != b.quiver() || a.dim() != b.dim())) {
    throw ConsistencyError("orbit functions live on different spaces");
  }
}

}  // namespace

OrbitFunction& OrbitFunction::operator+=(const OrbitFunction& o) {
  check_same_space(*this, o);
  for (size_t k = 0; k < values.size(); ++k) values[k] += o.values[k];
  return *this;
}

OrbitFunction& OrbitFunction::operator-=(const OrbitFunction& o) {
  check_same_space(*this, o);
  for (size_t k = 0; k < values.size(); ++k) values[k] -= o.values[k];
  return *this;
}

OrbitFunction OrbitFunction::scaled(const Scalar& s) const {
  OrbitFunction r = *this;
  for (auto& v : r.values) v *= s;
  return r;
}

bool operator==(const OrbitFunction& a, const OrbitFunction& b) {
  if (a.quiver() != b.quiver() || a.dim() != b.dim()) return false;
  return a.values == b.values;
}

bool OrbitFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_zero(); });
}

int m_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  int m = 0;
  for (const auto& h : q.arrows()) m += a[static_cast<size_t>(h.source)] * b[static_cast<size_t>(h.target)];
  for (int i = 0; i < q.base_count(); ++i) m += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
  return m;
}

OrbitFunction fn_mul(const OrbitFunction& f1, const OrbitFunction& f2) {
  const Quiver& q = f2.quiver();
  const int p = f2.table->prime();
  const Field& field = f2.field();
  if (field != f1.field()) throw ConsistencyError("orbit functions over different fields");
  const DimVector alpha = extend_by_zero(q, f1.dim());
  for (int v = q.base_count(); v < q.vertex_count(); ++v) {
    if (alpha[static_cast<size_t>(v)] != 0) throw ConfigError("left factor must vanish on framing vertices");
  }
  if (f1.quiver() != q && f1.quiver() != q.base()) throw ConfigError("factors live on different quivers");
  const DimVector& beta = f2.dim();
  const auto quot_table = orbits(q, p, alpha);
  if (quot_table->labels() != f1.table->labels()) throw ConsistencyError("left factor labels do not match");
  const auto sub_table = orbits(q, p, beta);
  if (sub_table->labels() != f2.table->labels()) throw ConsistencyError("right factor labels do not match");

  const auto target = orbits(q, p, alpha + beta);
  OrbitFunction out = OrbitFunction::zero(target, field);
  const Scalar scale = field->v_pow(-m_form(q, alpha, beta));
  for (int c = 0; c < target->size(); ++c) {
    Scalar acc = field->zero();
    for (const auto& [key, count] : class_census(target, c, beta)) {
      const Scalar& a = f1.values[static_cast<size_t>(key.second)];
      const Scalar& b = f2.values[static_cast<size_t>(key.first)];
      if (a.is_zero() || b.is_zero()) continue;
      acc += (a * b) * mpq_class(static_cast<unsigned long>(count));
    }
    out.values[static_cast<size_t>(c)] = acc * scale;
  }
  return out;
}

namespace {

struct FlipLayout {
  // Pairs (source coordinate, target coordinate, sign) over flipped arrows.
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<int> sign;
  std::vector<bool> flipped_coord;
  int d = 0;
};

FlipLayout layout_for(const RepSpace& from, const RepSpace& to, const std::vector<int>& flip) {
  FlipLayout l;
  l.flipped_coord.assign(static_cast<size_t>(from.coordinate_count()), false);
  const Quiver& q = from.quiver();
  for (int h : flip) {
    const int rows = from.rows(h);  // dim at target in q
    const int cols = from.cols(h);  // dim at source in q
    l.d += rows * cols;
    const int eps = q.arrow(h).reversed ? -1 : 1;
    for (int b = 0; b < rows; ++b) {
      for (int a = 0; a < cols; ++a) {
        // y_h[b][a] in q pairs with y'_h[a][b] in the reoriented quiver.
        const int ks = from.offset(h) + b * cols + a;
        const int kt = to.offset(h) + a * rows + b;
        l.src.push_back(ks);
        l.tgt.push_back(kt);
        l.sign.push_back(eps);
        l.flipped_coord[static_cast<size_t>(ks)] = true;
      }
    }
  }
  return l;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// For a target point y', accumulates counts[label][r] of source points x in
// the fiber over z(y') with character exponent r.
template <class Sink>
void fiber_sum(const RepSpace& from, const FlipLayout& l, const std::vector<int>& tdig, Sink&& sink) {
  const int p = from.prime();
  const int n = from.coordinate_count();
  std::vector<int> base(static_cast<size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    if (!l.flipped_coord[static_cast<size_t>(k)]) base[static_cast<size_t>(k)] = tdig[static_cast<size_t>(k)];
  }
  // Coefficient of each source flipped coordinate in the pairing.
  std::vector<int> coef(static_cast<size_t>(n), 0);
  for (size_t e = 0; e < l.src.size(); ++e) {
    coef[static_cast<size_t>(l.src[e])] = (l.sign[e] * tdig[static_cast<size_t>(l.tgt[e])] % p + p) % p;
  }
  std::vector<int> fk;
  for (int k = 0; k < n; ++k) {
    if (l.flipped_coord[static_cast<size_t>(k)]) fk.push_back(k);
  }
  const std::uint64_t base_index = from.from_digits(base);
  std::vector<std::uint64_t> weight(fk.size());
  for (size_t j = 0; j < fk.size(); ++j) {
    std::uint64_t w = 1;
    for (int t = 0; t < fk[j]; ++t) w *= static_cast<std::uint64_t>(p);
    weight[j] = w;
  }
  std::uint64_t total = 1;
  for (size_t j = 0; j < fk.size(); ++j) total *= static_cast<std::uint64_t>(p);

  if (p == 2) {
    std::vector<std::uint64_t> idx(total);
    std::uint64_t mask = 0;
    for (size_t j = 0; j < fk.size(); ++j) {
      if (coef[static_cast<size_t>(fk[j])]) mask |= weight[j];
    }
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t x = base_index;
      for (size_t j = 0; j < fk.size(); ++j) {
        if ((code >> j) & 1U) x |= weight[j];
      }
      idx[code] = x;
    }
    std::vector<std::uint8_t> par(total);
    kernels::masked_parity(idx.data(), mask, par.data(), total);
    for (std::uint64_t code = 0; code < total; ++code) sink(idx[code], static_cast<int>(par[code]));
    return;
  }
  std::vector<int> dig(fk.size(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = base_index;
    int r = 0;
    for (size_t j = 0; j < fk.size(); ++j) {
      x += static_cast<std::uint64_t>(dig[j]) * weight[j];
      r += dig[j] * coef[static_cast<size_t>(fk[j])];
    }
    sink(x, r % p);
    for (size_t j = 0; j < fk.size(); ++j) {
      if (++dig[j] < p) break;
      dig[j] = 0;
    }
  }
}

}  // namespace

ScalarMatrix fourier_matrix(const Quiver& q, int p, const DimVector& nu, const std::vector<int>& flip,
                            const Field& field) {
  const std::vector<int> fl = sorted_unique(flip);
  const Quiver target_q = reorient(q, fl);
  const auto src = orbits(q, p, nu);
  const auto tgt = orbits(target_q, p, nu);
  const FlipLayout l = layout_for(src->space(), tgt->space(), fl);
  ScalarMatrix m(field, static_cast<size_t>(tgt->size()), static_cast<size_t>(src->size()));
  const Scalar scale = field->v_pow(-l.d);
  std::vector<std::vector<long>> counts(static_cast<size_t>(src->size()), std::vector<long>(static_cast<size_t>(p), 0));
  for (int c = 0; c < tgt->size(); ++c) {
    for (auto& row : counts) std::fill(row.begin(), row.end(), 0);
    const auto tdig = tgt->space().digits(tgt->at(c).rep);
    fiber_sum(src->space(), l, tdig, [&](std::uint64_t x, int r) {
      ++counts[static_cast<size_t>(src->label(x))][static_cast<size_t>(r)];
    });
    for (int s = 0; s < src->size(); ++s) {
      Scalar acc = field->zero();
      for (int r = 0; r < p; ++r) {
        const long n = counts[static_cast<size_t>(s)][static_cast<size_t>(r)];
        if (n != 0) acc += field->zeta_p(r) * mpq_class(n);
      }
      if (!acc.is_zero()) m.at(static_cast<size_t>(c), static_cast<size_t>(s)) = acc * scale;
    }
  }
  return m;
}

OrbitFunction fourier(const OrbitFunction& f, const std::vector<int>& flip) {
  const Quiver target_q = reorient(f.quiver(), sorted_unique(flip));
  const int p = f.table->prime();
  const ScalarMatrix m = fourier_matrix(f.quiver(), p, f.dim(), flip, f.field());
  OrbitFunction out;
  out.table = orbits(target_q, p, f.dim());
  out.values = m.apply(f.values);
  return out;
}

ScalarMatrix fourier_between(const Quiver& q, const Quiver& target, int p, const DimVector& nu, const Field& field) {
  const auto flip = orientation_difference(q, target);
  const Quiver r = reorient(q, flip);
  for (int h = 0; h < q.arrow_count(); ++h) {
    if (r.arrow(h).reversed != target.arrow(h).reversed) {
      throw ConfigError("target orientation disagrees with the reversed flags");
    }
  }
  return fourier_matrix(q, p, nu, flip, field);
}

std::vector<Scalar> fourier_pointwise(const OrbitFunction& f, const std::vector<int>& flip) {
  const std::vector<int> fl = sorted_unique(flip);
  const Quiver target_q = reorient(f.quiver(), fl);
  const int p = f.table->prime();
  const RepSpace& from = f.table->space();
  const RepSpace to(target_q, p, f.dim());
  const FlipLayout l = layout_for(from, to, fl);
  const Field& field = f.field();
  const Scalar scale = field->v_pow(-l.d);
  std::vector<Scalar> out;
  const std::uint64_t n = to.point_count();
  out.reserve(n);
  for (std::uint64_t y = 0; y < n; ++y) {
    Scalar acc = field->zero();
    fiber_sum(from, l, to.digits(y), [&](std::uint64_t x, int r) {
      const Scalar& v = f.at_point(x);
      if (!v.is_zero()) acc += v * field->zeta_p(r);
    });
    out.push_back(acc * scale);
  }
  return out;
}

bool is_invariant(const OrbitTable& table, const std::vector<Scalar>& values) {
  if (values.size() != table.point_count()) return false;
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    if (values[x] != values[table.at(table.label(x)).rep]) return false;
  }
  return true;
}

}  // namespace hallforge
