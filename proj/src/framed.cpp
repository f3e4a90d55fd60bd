// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/framed.hpp"

#include <algorithm>
#include <numeric>

#include "hallforge/error.hpp"
#include "hallforge/gf_matrix.hpp"

namespace hallforge {

namespace {

bool nonnegative(const DimVector& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

std::uint64_t base_group_order(const Quiver& q, int p, const DimVector& nu) {
  std::uint64_t g = 1;
  for (int j = 0; j < q.base_count(); ++j) g *= gl_order(nu[static_cast<size_t>(j)], p);
  return g;
}

mpq_class p_power(int p, int k) {
  mpq_class r(1);
  for (int t = 0; t < std::abs(k); ++t) r *= p;
  if (k < 0) r = 1 / r;
  return r;
}

// Cartesian product of per-vertex choices, visited in odometer order.
template <class Fn>
void for_each_choice(const std::vector<std::vector<GFMatrix>>& choices, Fn&& fn) {
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<size_t> pos(choices.size(), 0);
  std::vector<GFMatrix> pick(choices.size());
  while (true) {
    for (size_t v = 0; v < choices.size(); ++v) pick[v] = choices[v][pos[v]];
    fn(pick);
    size_t v = 0;
    for (; v < pos.size(); ++v) {
      if (++pos[v] < choices[v].size()) break;
      pos[v] = 0;
    }
    if (v == pos.size()) return;
  }
}

// Embeddings V -> V' that are injective on base vertices and the identity on framing vertices.
std::vector<std::vector<GFMatrix>> embedding_choices(const Quiver& q, int p, const DimVector& from,
                                                     const DimVector& to) {
  std::vector<std::vector<GFMatrix>> out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    const int a = from[static_cast<size_t>(v)];
    const int b = to[static_cast<size_t>(v)];
    if (v < q.base_count()) {
      out.push_back(enumerate_injective(a, b, p));
    } else {
      if (a != b) throw ConsistencyError("framing dimensions must agree");
      out.push_back({GFMatrix::identity(p, a)});
    }
  }
  return out;
}

// Solves x' y = y x for x, or returns nothing when Im y is not x'-stable.
std::optional<Representation> pull_back(const Quiver& q, const Representation& xp, const std::vector<GFMatrix>& y) {
  Representation x;
  for (const auto& b : y) x.dim.push_back(b.cols());
  for (int h = 0; h < q.arrow_count(); ++h) {
    const Arrow& a = q.arrow(h);
    auto sol = solve_in_basis(y[static_cast<size_t>(a.target)], xp.mats[static_cast<size_t>(h)] * y[static_cast<size_t>(a.source)]);
    if (!sol) return std::nullopt;
    x.mats.push_back(std::move(*sol));
  }
  return x;
}

}  // namespace

bool in_locus(const Quiver& q, const Representation& x, int i) {
  if (!is_source(q, i)) throw ConfigError("the injectivity locus needs vertex " + q.name(i) + " to be a source");
  const int n = x.dim[static_cast<size_t>(i)];
  if (n == 0) return true;
  int rows = 0;
  for (int h = 0; h < q.arrow_count(); ++h) {
    if (q.arrow(h).source == i) rows += x.mats[static_cast<size_t>(h)].rows();
  }
  if (rows < n) return false;
  GFMatrix stack(x.mats.front().prime(), rows, n);
  int r0 = 0;
  for (int h = 0; h < q.arrow_count(); ++h) {
    if (q.arrow(h).source != i) continue;
    const GFMatrix& m = x.mats[static_cast<size_t>(h)];
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < n; ++c) stack.set(r0 + r, c, m.at(r, c));
    }
    r0 += m.rows();
  }
  return mat_rank(stack) == n;
}

bool ModuleVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
}

FramedContext::FramedContext(Quiver qhat, int p, DimVector omega, bool cross_check)
    : q_(std::move(qhat)), p_(p), omega_(std::move(omega)), cross_check_(cross_check), hall_(q_.base(), p) {
  if (!q_.is_enlarged()) throw ConfigError("the module needs an enlarged quiver");
  if (q_.has_loops()) throw ConfigError("quivers with loops have no source orientation");
  if (static_cast<int>(omega_.size()) != q_.base_count()) throw ConfigError("omega needs one entry per base vertex");
  if (!nonnegative(omega_)) throw ConfigError("omega must be nonnegative");
  // Divided powers up to the Serre degrees used here must be invertible.
  for (int m = 0; m <= 3; ++m) {
    if (quantum_factorial(field(), m).is_zero()) throw ConsistencyError("quantum factorial vanishes");
  }
}

DimVector FramedContext::full_dim(const DimVector& nu_base) const { return framed_dim(q_, nu_base, omega_); }

ScalarMatrix FramedContext::n_subspace(const DimVector& nu_base, int i) const {
  const DimVector nu = full_dim(nu_base);
  const auto table = orbits(q_, p_, nu);
  const size_t n = static_cast<size_t>(table->size());
  if (nu[static_cast<size_t>(i)] == 0) return ScalarMatrix(field(), 0, n);
  const Quiver qs = source_orientation(q_, i);
  const auto st = orbits(qs, p_, nu);
  std::vector<size_t> locus;
  for (int c = 0; c < st->size(); ++c) {
    if (in_locus(qs, st->rep(c), i)) locus.push_back(static_cast<size_t>(c));
  }
  const ScalarMatrix t = arrows_into(q_, i).empty() ? ScalarMatrix::identity(field(), n)
                                                    : fourier_between(q_, qs, p_, nu, field());
  ScalarMatrix l(field(), locus.size(), n);
  for (size_t r = 0; r < locus.size(); ++r) {
    for (size_t c = 0; c < n; ++c) l.at(r, c) = t.at(locus[r], c);
  }
  const auto ker = kernel_basis(l);
  ScalarMatrix out(field(), ker.size(), n);
  for (size_t r = 0; r < ker.size(); ++r) {
    for (size_t c = 0; c < n; ++c) out.at(r, c) = ker[r][c];
  }
  return out;
}

QuotientSpace FramedContext::build_quotient(const DimVector& nu_base, bool reversed) const {
  QuotientSpace qs;
  qs.nu_base = nu_base;
  if (!nonnegative(nu_base)) {
    qs.n_basis = ScalarMatrix(field(), 0, 0);
    qs.projection = ScalarMatrix(field(), 0, 0);
    qs.inclusion = ScalarMatrix(field(), 0, 0);
    return qs;
  }
  qs.nu = full_dim(nu_base);
  qs.table = orbits(q_, p_, qs.nu);
  const size_t n = static_cast<size_t>(qs.table->size());
  std::vector<ScalarMatrix> parts;
  size_t rows = 0;
  for (int i = 0; i < q_.base_count(); ++i) {
    parts.push_back(n_subspace(nu_base, i));
    rows += parts.back().rows();
  }
  // Column c of the working matrix is orbit order[c].
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  if (reversed) std::reverse(order.begin(), order.end());
  ScalarMatrix m(field(), rows, n);
  size_t r0 = 0;
  for (const auto& part : parts) {
    for (size_t r = 0; r < part.rows(); ++r) {
      for (size_t c = 0; c < n; ++c) m.at(r0 + r, c) = part.at(r, order[c]);
    }
    r0 += part.rows();
  }
  const auto piv = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (size_t c : piv) is_pivot[order[c]] = true;
  qs.n_basis = ScalarMatrix(field(), piv.size(), n);
  for (size_t r = 0; r < piv.size(); ++r) {
    for (size_t c = 0; c < n; ++c) qs.n_basis.at(r, order[c]) = m.at(r, c);
    qs.pivots.push_back(order[piv[r]]);
  }
  for (size_t k = 0; k < n; ++k) {
    if (!is_pivot[k]) qs.coset.push_back(k);
  }
  if (qs.coset.size() > kQuotientCeiling) {
    throw ScaleError("quotient space at " + dim_to_string(qs.nu) + " is too large", static_cast<double>(qs.coset.size()));
  }
  const size_t d = qs.coset.size();
  qs.projection = ScalarMatrix(field(), d, n);
  qs.inclusion = ScalarMatrix(field(), n, d);
  for (size_t c = 0; c < d; ++c) {
    qs.projection.at(c, qs.coset[c]) = field()->one();
    qs.inclusion.at(qs.coset[c], c) = field()->one();
  }
  // e_pivot = e_pivot - row, which only involves coset labels.
  for (size_t r = 0; r < qs.pivots.size(); ++r) {
    for (size_t c = 0; c < d; ++c) qs.projection.at(c, qs.pivots[r]) = -qs.n_basis.at(r, qs.coset[c]);
  }
  return qs;
}

const QuotientSpace& FramedContext::quotient(const DimVector& nu_base) const {
  auto it = quotients_.find(nu_base);
  if (it != quotients_.end()) return it->second;
  return quotients_.emplace(nu_base, build_quotient(nu_base, false)).first->second;
}

QuotientSpace FramedContext::alternative_quotient(const DimVector& nu_base) const {
  return build_quotient(nu_base, true);
}

Scalar FramedContext::k_scalar(int i, const DimVector& nu_base) const {
  const DimVector nu = full_dim(nu_base);
  int e = -2 * nu[static_cast<size_t>(i)];
  for (const auto& a : q_.arrows()) {
    if (a.source == i) e += nu[static_cast<size_t>(a.target)];
    if (a.target == i) e += nu[static_cast<size_t>(a.source)];
  }
  return field()->v_pow(e);
}

ScalarMatrix FramedContext::K(int i, const DimVector& nu_base, int power) const {
  const size_t d = quotient(nu_base).dim();
  if (d == 0) return ScalarMatrix(field(), 0, 0);
  Scalar s = k_scalar(i, nu_base);
  if (power < 0) s = s.inv();
  Scalar r = field()->one();
  for (int t = 0; t < std::abs(power); ++t) r *= s;
  return ScalarMatrix::identity(field(), d).scaled(r);
}

ScalarMatrix FramedContext::eplus_source(const Quiver& qs, int i, int n, const DimVector& nu_base) const {
  const DimVector nu = full_dim(nu_base);
  DimVector nup = nu;
  nup[static_cast<size_t>(i)] += n;
  const auto tgt = orbits(qs, p_, nu);
  const auto src = orbits(qs, p_, nup);
  ScalarMatrix m(field(), static_cast<size_t>(tgt->size()), static_cast<size_t>(src->size()));
  const int ni = nu[static_cast<size_t>(i)];
  std::vector<int> out_arrows;
  int free_entries = 0;
  for (int h = 0; h < qs.arrow_count(); ++h) {
    if (qs.arrow(h).source != i) continue;
    out_arrows.push_back(h);
    free_entries += nup[static_cast<size_t>(qs.arrow(h).target)] * n;
  }
  std::uint64_t fillings = 1;
  for (int t = 0; t < free_entries; ++t) fillings *= static_cast<std::uint64_t>(p_);
  if (fillings > kPointCeiling) throw ScaleError("E+ extension count", static_cast<double>(fillings));
  // |Inj(nu_i, nu_i + n)| / |GL(nu_i + n)| = 1 / (|GL(n)| p^{n nu_i}).
  Scalar scale = field()->v_pow(-n * ni) * (p_power(p_, -n * ni) / mpq_class(static_cast<unsigned long>(gl_order(n, p_))));
  std::vector<long> counts(static_cast<size_t>(src->size()));
  for (int c = 0; c < tgt->size(); ++c) {
    std::fill(counts.begin(), counts.end(), 0);
    const Representation x = tgt->rep(c);
    Representation xp = x;
    xp.dim = nup;
    for (std::uint64_t code = 0; code < fillings; ++code) {
      std::uint64_t k = code;
      for (int h : out_arrows) {
        const GFMatrix& old = x.mats[static_cast<size_t>(h)];
        GFMatrix ext(p_, old.rows(), ni + n);
        for (int r = 0; r < old.rows(); ++r) {
          for (int col = 0; col < ni; ++col) ext.set(r, col, old.at(r, col));
          for (int col = ni; col < ni + n; ++col) {
            ext.set(r, col, static_cast<long>(k % static_cast<std::uint64_t>(p_)));
            k /= static_cast<std::uint64_t>(p_);
          }
        }
        xp.mats[static_cast<size_t>(h)] = std::move(ext);
      }
      if (!in_locus(qs, xp, i)) continue;
      ++counts[static_cast<size_t>(src->classify(xp))];
    }
    for (int s = 0; s < src->size(); ++s) {
      if (counts[static_cast<size_t>(s)] != 0) m.at(static_cast<size_t>(c), static_cast<size_t>(s)) = scale * mpq_class(counts[static_cast<size_t>(s)]);
    }
  }
  return m;
}

const ScalarMatrix& FramedContext::full_eplus(int i, int n, const DimVector& nu_base) const {
  const auto key = std::make_tuple(i, n, nu_base);
  auto it = full_eplus_.find(key);
  if (it != full_eplus_.end()) return it->second;
  DimVector src_base = nu_base;
  src_base[static_cast<size_t>(i)] += n;
  ScalarMatrix m;
  if (!nonnegative(nu_base)) {
    const size_t cols = nonnegative(src_base) ? static_cast<size_t>(orbits(q_, p_, full_dim(src_base))->size()) : 0;
    m = ScalarMatrix(field(), 0, cols);
  } else if (arrows_into(q_, i).empty()) {
    m = eplus_source(q_, i, n, nu_base);
  } else {
    const Quiver qs = source_orientation(q_, i);
    const ScalarMatrix fwd = fourier_between(q_, qs, p_, full_dim(src_base), field());
    const ScalarMatrix back = fourier_between(qs, q_, p_, full_dim(nu_base), field());
    m = back * eplus_source(qs, i, n, nu_base) * fwd;
  }
  return full_eplus_.emplace(key, std::move(m)).first->second;
}

const ScalarMatrix& FramedContext::full_eminus(const ClassKey& alpha, const DimVector& nu_base) const {
  const auto key = std::make_pair(alpha, nu_base);
  auto it = full_eminus_.find(key);
  if (it != full_eminus_.end()) return it->second;
  const DimVector tgt_base = nu_base + alpha.dim;
  ScalarMatrix m;
  if (!nonnegative(nu_base)) {
    const size_t rows = nonnegative(tgt_base) ? static_cast<size_t>(orbits(q_, p_, full_dim(tgt_base))->size()) : 0;
    m = ScalarMatrix(field(), rows, 0);
  } else {
    const DimVector nu = full_dim(nu_base);
    const DimVector a = extend_by_zero(q_, alpha.dim);
    const auto src = orbits(q_, p_, nu);
    const auto tgt = orbits(q_, p_, nu + a);
    const int dv = total_dim(alpha.dim);
    Scalar c = field()->v_pow(dv + euler_form(q_, a, nu) + dv + m_form(q_, a, nu));
    if (dv % 2 == 1) c = -c;
    const auto one_alpha = OrbitFunction::indicator(hall_.classes(alpha.dim), alpha.label, field());
    m = ScalarMatrix(field(), static_cast<size_t>(tgt->size()), static_cast<size_t>(src->size()));
    for (int b = 0; b < src->size(); ++b) {
      const auto img = fn_mul(one_alpha, OrbitFunction::indicator(src, b, field()));
      for (int g = 0; g < tgt->size(); ++g) {
        m.at(static_cast<size_t>(g), static_cast<size_t>(b)) = img.values[static_cast<size_t>(g)] * c;
      }
    }
    if (cross_check_) {
      ++stats_.eminus_cross_checks;
      if (full_eminus_direct(alpha, nu_base) != m) {
        throw ConsistencyError("E- product and push-pull forms disagree at " + dim_to_string(nu));
      }
    }
  }
  return full_eminus_.emplace(key, std::move(m)).first->second;
}

ScalarMatrix FramedContext::full_eminus_direct(const ClassKey& alpha, const DimVector& nu_base) const {
  const DimVector nu = full_dim(nu_base);
  const DimVector a = extend_by_zero(q_, alpha.dim);
  const DimVector nup = nu + a;
  const auto src = orbits(q_, p_, nu);
  const auto tgt = orbits(q_, p_, nup);
  const auto quot = hall_.classes(alpha.dim);
  const auto choices = embedding_choices(q_, p_, nu, nup);
  const int dv = total_dim(alpha.dim);
  Scalar c = field()->v_pow(dv + euler_form(q_, a, nu) + dv) *
             (mpq_class(1) / mpq_class(static_cast<unsigned long>(base_group_order(q_, p_, nu))));
  if (dv % 2 == 1) c = -c;
  ScalarMatrix m(field(), static_cast<size_t>(tgt->size()), static_cast<size_t>(src->size()));
  std::vector<long> counts(static_cast<size_t>(src->size()));
  for (int g = 0; g < tgt->size(); ++g) {
    std::fill(counts.begin(), counts.end(), 0);
    const Representation xp = tgt->rep(g);
    for_each_choice(choices, [&](const std::vector<GFMatrix>& y) {
      const auto x = pull_back(q_, xp, y);
      if (!x) return;
      if (quot->classify(quotient_by(q_, xp, y)) != alpha.label) return;
      ++counts[static_cast<size_t>(src->classify(*x))];
    });
    for (int b = 0; b < src->size(); ++b) {
      if (counts[static_cast<size_t>(b)] != 0) m.at(static_cast<size_t>(g), static_cast<size_t>(b)) = c * mpq_class(counts[static_cast<size_t>(b)]);
    }
  }
  return m;
}

ScalarMatrix FramedContext::induce(const ScalarMatrix& full, const QuotientSpace& src, const QuotientSpace& tgt) const {
  if (src.dim() == 0 || tgt.dim() == 0) return ScalarMatrix(field(), tgt.dim(), src.dim());
  ++stats_.stability_checks;
  if (src.n_basis.rows() > 0 && !(tgt.projection * full * src.n_basis.transpose()).is_zero()) {
    ++stats_.stability_failures;
    throw ConsistencyError("operator does not preserve N between " + dim_to_string(src.nu) + " and " +
                           dim_to_string(tgt.nu));
  }
  return tgt.projection * full * src.inclusion;
}

const ScalarMatrix& FramedContext::eplus(int i, int n, const DimVector& nu_base) const {
  const auto key = std::make_tuple(i, n, nu_base);
  auto it = eplus_.find(key);
  if (it != eplus_.end()) return it->second;
  DimVector src = nu_base;
  src[static_cast<size_t>(i)] += n;
  ScalarMatrix m = induce(full_eplus(i, n, nu_base), quotient(src), quotient(nu_base));
  return eplus_.emplace(key, std::move(m)).first->second;
}

const ScalarMatrix& FramedContext::eminus(const ClassKey& alpha, const DimVector& nu_base) const {
  const auto key = std::make_pair(alpha, nu_base);
  auto it = eminus_.find(key);
  if (it != eminus_.end()) return it->second;
  ScalarMatrix m = induce(full_eminus(alpha, nu_base), quotient(nu_base), quotient(nu_base + alpha.dim));
  return eminus_.emplace(key, std::move(m)).first->second;
}

bool FramedContext::same_induced(const ScalarMatrix& full, const DimVector& src, const DimVector& tgt) const {
  ++stats_.well_defined_checks;
  const QuotientSpace& s = quotient(src);
  const QuotientSpace& t = quotient(tgt);
  if (s.dim() == 0 || t.dim() == 0) return true;
  const QuotientSpace s2 = alternative_quotient(src);
  const QuotientSpace t2 = alternative_quotient(tgt);
  const ScalarMatrix a = t.projection * full * s.inclusion;
  const ScalarMatrix b = t2.projection * full * s2.inclusion;
  // Coordinates of the alternative coset representatives in the standard basis.
  return a * (s.projection * s2.inclusion) == (t.projection * t2.inclusion) * b;
}

bool FramedContext::eplus_well_defined(int i, int n, const DimVector& nu_base) const {
  DimVector src = nu_base;
  src[static_cast<size_t>(i)] += n;
  if (!nonnegative(nu_base)) return true;
  return same_induced(full_eplus(i, n, nu_base), src, nu_base);
}

bool FramedContext::eminus_well_defined(const ClassKey& alpha, const DimVector& nu_base) const {
  if (!nonnegative(nu_base)) return true;
  return same_induced(full_eminus(alpha, nu_base), nu_base, nu_base + alpha.dim);
}

ModuleVector FramedContext::generator() const {
  const DimVector zero_nu(static_cast<size_t>(q_.base_count()), 0);
  const QuotientSpace& qs = quotient(zero_nu);
  if (qs.dim() != 1 || qs.orbit_count() != 1) throw ConsistencyError("the framing space should be a single point");
  return ModuleVector{zero_nu, {field()->one()}};
}

ModuleVector FramedContext::zero(const DimVector& nu_base) const {
  return ModuleVector{nu_base, std::vector<Scalar>(quotient(nu_base).dim(), field()->zero())};
}

ModuleVector FramedContext::act(const std::vector<Generator>& word, ModuleVector f) const {
  for (const Generator& g : word) {
    switch (g.kind) {
      case Generator::Kind::scalar:
        for (auto& c : f.coords) c *= *g.value;
        break;
      case Generator::Kind::K:
      case Generator::Kind::K_inv: {
        if (f.coords.empty()) break;
        Scalar s = k_scalar(g.vertex, f.nu);
        if (g.kind == Generator::Kind::K_inv) s = s.inv();
        for (auto& c : f.coords) c *= s;
        break;
      }
      case Generator::Kind::E_plus: {
        if (g.vertex < 0 || g.vertex >= q_.base_count() || g.n < 0) throw ConfigError("bad E+ generator");
        DimVector t = f.nu;
        t[static_cast<size_t>(g.vertex)] -= g.n;
        if (f.coords.empty() || !nonnegative(t)) {
          f = zero(t);
          break;
        }
        f = ModuleVector{t, eplus(g.vertex, g.n, t).apply(f.coords)};
        break;
      }
      case Generator::Kind::E_minus: {
        if (static_cast<int>(g.cls.dim.size()) != q_.base_count()) throw ConfigError("bad E- generator");
        const DimVector t = f.nu + g.cls.dim;
        if (f.coords.empty()) {
          f = zero(t);
          break;
        }
        f = ModuleVector{t, eminus(g.cls, f.nu).apply(f.coords)};
        break;
      }
    }
  }
  return f;
}

std::vector<WeightSpace> FramedContext::highest_weight_module(int depth) const {
  if (depth < 0) throw ConfigError("depth must be nonnegative");
  std::vector<WeightSpace> out;
  const ModuleVector one = generator();
  for (const auto& beta : hall_.dims_up_to(depth)) {
    WeightSpace w;
    w.beta = beta;
    w.ambient_dim = quotient(beta).dim();
    const auto cls = hall_.classes_of_dim(beta);
    ScalarMatrix span(field(), w.ambient_dim, cls.size());
    for (size_t k = 0; k < cls.size(); ++k) {
      const ModuleVector img = act({Generator::E_minus(cls[k])}, one);
      for (size_t r = 0; r < w.ambient_dim; ++r) span.at(r, k) = img.coords[r];
    }
    w.dim = rank(span);
    out.push_back(w);
  }
  return out;
}

bool fiber_formula_applies(const Quiver& base, int p, const ClassKey& alpha, int i) {
  if (!is_source(base, i)) throw ConfigError("fiber counts need a source vertex");
  return in_locus(base, orbits(base, p, alpha.dim)->rep(alpha.label), i);
}

FiberCount fiber_count(const Quiver& qhat, int p, const DimVector& nu, int i, const ClassKey& alpha,
                       const ClassKey& beta, int max_fibers) {
  if (!is_source(qhat, i)) throw ConfigError("fiber counts need a source vertex");
  const Quiver base = qhat.base();
  const Field field = make_field(p);
  const DimVector a = extend_by_zero(qhat, alpha.dim);
  const DimVector b = extend_by_zero(qhat, beta.dim);
  if (a != b + unit(qhat, i)) throw ConfigError("alpha must have dimension beta + i");
  const DimVector nup = nu + b;  // nu' = nu + alpha - i
  const DimVector mu = nu + a;
  const auto alpha_table = orbits(base, p, alpha.dim);
  const auto beta_table = orbits(base, p, beta.dim);

  FiberCount fc;
  std::uint64_t g = hall_number(base, p, alpha.dim, alpha.label, unit(base, i), 0, beta.dim, beta.label);
  mpq_class pred = p_power(p, -euler_form(qhat, unit(qhat, i), nu));
  pred *= static_cast<unsigned long>(base_group_order(qhat, p, mu));
  pred *= static_cast<unsigned long>(g);
  pred *= static_cast<unsigned long>(beta_table->at(beta.label).aut_order);
  pred /= static_cast<unsigned long>(alpha_table->at(alpha.label).aut_order);
  fc.predicted = field->rational(pred);
  pred.canonicalize();
  fc.integral = pred.get_den() == 1 && pred >= 0;

  const auto mu_points = enumerate_points(qhat, p, mu);
  const auto choices = embedding_choices(qhat, p, nup, mu);
  const auto nup_table = orbits(qhat, p, nup);
  fc.all_equal = true;
  for (int cl = 0; cl < nup_table->size() && fc.fibers < max_fibers; ++cl) {
    const Representation xp = nup_table->rep(cl);
    if (!in_locus(qhat, xp, i)) continue;
    for (const auto& w : enumerate_graded_subspaces(nup, nu, p)) {
      const auto x = pull_back(qhat, xp, w);
      if (!x || !in_locus(qhat, *x, i)) continue;
      if (beta_table->classify(quotient_by(qhat, xp, w)) != beta.label) continue;
      std::uint64_t count = 0;
      for_each_choice(choices, [&](const std::vector<GFMatrix>& yp) {
        std::vector<GFMatrix> y;
        for (size_t v = 0; v < yp.size(); ++v) y.push_back(yp[v] * w[v]);
        for (const auto& x1 : mu_points) {
          bool ok = true;
          for (int h = 0; h < qhat.arrow_count() && ok; ++h) {
            const Arrow& ar = qhat.arrow(h);
            ok = x1.mats[static_cast<size_t>(h)] * yp[static_cast<size_t>(ar.source)] ==
                 yp[static_cast<size_t>(ar.target)] * xp.mats[static_cast<size_t>(h)];
          }
          if (!ok || !in_locus(qhat, x1, i)) continue;
          if (alpha_table->classify(quotient_by(qhat, x1, y)) != alpha.label) continue;
          ++count;
        }
      });
      if (fc.fibers == 0) fc.counted = count;
      if (count != fc.counted) fc.all_equal = false;
      ++fc.fibers;
      break;
    }
  }
  return fc;
}

}  // namespace hallforge
