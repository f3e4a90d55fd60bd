// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/hall.hpp"

#include <utility>

#include "hallforge/error.hpp"

namespace hallforge {

namespace {

template <class Map, class Key>
void add_term(Map& m, const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

// All vectors b with 0 <= b <= d componentwise.
std::vector<DimVector> sub_dims(const DimVector& d) {
  std::vector<DimVector> out;
  DimVector b(d.size(), 0);
  while (true) {
    out.push_back(b);
    size_t k = 0;
    for (; k < d.size(); ++k) {
      if (++b[k] <= d[k]) break;
      b[k] = 0;
    }
    if (k == d.size()) break;
  }
  return out;
}

}  // namespace

void HallElement::add(const ClassKey& k, const Scalar& c) { add_term(terms, k, c); }
void ExtendedElement::add(const ExtKey& k, const Scalar& c) { add_term(terms, k, c); }
void Tensor::add(const std::vector<ExtKey>& k, const Scalar& c) { add_term(terms, k, c); }

HallContext::HallContext(Quiver q, int p) : q_(std::move(q)), p_(p), field_(make_field(p)) {
  if (q_.is_enlarged()) throw ConfigError("Hall algebras are built on plain quivers");
}

OrbitTablePtr HallContext::classes(const DimVector& d) const { return orbits(q_, p_, d); }

std::vector<ClassKey> HallContext::classes_of_dim(const DimVector& d) const {
  std::vector<ClassKey> out;
  const auto t = classes(d);
  for (int l = 0; l < t->size(); ++l) out.push_back(ClassKey{d, l});
  return out;
}

std::vector<DimVector> HallContext::dims_up_to(int n) const {
  std::vector<DimVector> out;
  DimVector cap(static_cast<size_t>(q_.vertex_count()), n);
  for (const auto& d : sub_dims(cap)) {
    if (total_dim(d) <= n) out.push_back(d);
  }
  return out;
}

std::uint64_t HallContext::aut(const ClassKey& k) const { return classes(k.dim)->at(k.label).aut_order; }

ClassKey HallContext::zero_class() const { return ClassKey{DimVector(static_cast<size_t>(q_.vertex_count()), 0), 0}; }

ClassKey HallContext::simple(int i) const { return semisimple(unit(q_, i)); }

ClassKey HallContext::semisimple(const DimVector& d) const { return ClassKey{d, classes(d)->label(0)}; }

std::uint64_t HallContext::hall(const ClassKey& gamma, const ClassKey& alpha, const ClassKey& beta) const {
  return hall_number(q_, p_, gamma.dim, gamma.label, alpha.dim, alpha.label, beta.dim, beta.label);
}

HallElement HallContext::one() const { return u(zero_class()); }

HallElement HallContext::u(const ClassKey& k) const {
  HallElement e;
  e.add(k, field_->one());
  return e;
}

HallElement HallContext::mul(const HallElement& a, const HallElement& b, bool twisted) const {
  HallElement out;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      const DimVector gd = ka.dim + kb.dim;
      const auto t = classes(gd);
      Scalar coeff = ca * cb;
      if (twisted) coeff *= field_->v_pow(euler_form(q_, ka.dim, kb.dim));
      for (int g = 0; g < t->size(); ++g) {
        const Census& c = class_census(t, g, kb.dim);
        auto it = c.find({kb.label, ka.label});
        if (it == c.end()) continue;
        out.add(ClassKey{gd, g}, coeff * mpq_class(static_cast<unsigned long>(it->second)));
      }
    }
  }
  return out;
}

ExtendedElement HallContext::ext(Flavor f, const DimVector& mu, const ClassKey& k) const {
  ExtendedElement e;
  e.flavor = f;
  e.add(ExtKey{mu, k}, field_->one());
  return e;
}

ExtendedElement HallContext::K(Flavor f, const DimVector& mu) const { return ext(f, mu, zero_class()); }

ExtendedElement HallContext::ext_mul(const ExtendedElement& a, const ExtendedElement& b) const {
  if (a.flavor != b.flavor) throw ConfigError("cannot multiply elements of different flavors");
  ExtendedElement out;
  out.flavor = a.flavor;
  const int sign = a.flavor == Flavor::plus ? -1 : 1;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      // Move K_nu of the right factor past u_alpha of the left.
      const Scalar coeff = ca * cb * field_->v_pow(sign * symmetric_form(q_, kb.mu, ka.cls.dim));
      const DimVector mu = ka.mu + kb.mu;
      const HallElement prod = mul(u(ka.cls), u(kb.cls), true);
      for (const auto& [k, c] : prod.terms) out.add(ExtKey{mu, k}, coeff * c);
    }
  }
  return out;
}

Tensor HallContext::as_tensor(const ExtendedElement& a) const {
  Tensor t;
  t.flavor = a.flavor;
  t.arity = 1;
  for (const auto& [k, c] : a.terms) t.add({k}, c);
  return t;
}

Tensor HallContext::comultiply(const ExtendedElement& a) const { return comultiply_slot(as_tensor(a), 0); }

Tensor HallContext::comultiply_slot(const Tensor& t, int slot) const {
  Tensor out;
  out.flavor = t.flavor;
  out.arity = t.arity + 1;
  // The minus side is the image of the plus side under K_mu u_a -> K_{-mu} u_a.
  const int sign = t.flavor == Flavor::plus ? 1 : -1;
  for (const auto& [keys, coeff] : t.terms) {
    const ExtKey& k = keys.at(static_cast<size_t>(slot));
    const ClassKey& lam = k.cls;
    const auto lt = classes(lam.dim);
    const mpq_class a_lam(static_cast<unsigned long>(lt->at(lam.label).aut_order));
    for (const auto& bd : sub_dims(lam.dim)) {
      const DimVector ad = lam.dim - bd;
      const auto at = classes(ad);
      const auto bt = classes(bd);
      for (const auto& [sq, g] : class_census(lt, lam.label, bd)) {
        const int beta = sq.first;
        const int alpha = sq.second;
        mpq_class ratio(static_cast<unsigned long>(at->at(alpha).aut_order * bt->at(beta).aut_order));
        ratio *= static_cast<unsigned long>(g);
        ratio /= a_lam;
        // u_alpha K_{+-beta} = v^{-(alpha, beta)} K_{+-beta} u_alpha in either flavor.
        const int e = euler_form(q_, ad, bd) - symmetric_form(q_, ad, bd);
        const Scalar c = coeff * field_->v_pow(e) * ratio;
        std::vector<ExtKey> nk;
        for (int s = 0; s < t.arity; ++s) {
          if (s != slot) {
            nk.push_back(keys[static_cast<size_t>(s)]);
            continue;
          }
          DimVector shift = bd;
          for (int& x : shift) x *= sign;
          nk.push_back(ExtKey{k.mu + shift, ClassKey{ad, alpha}});
          nk.push_back(ExtKey{k.mu, ClassKey{bd, beta}});
        }
        out.add(nk, c);
      }
    }
  }
  return out;
}

Tensor HallContext::counit_slot(const Tensor& t, int slot) const {
  Tensor out;
  out.flavor = t.flavor;
  out.arity = t.arity - 1;
  for (const auto& [keys, coeff] : t.terms) {
    if (total_dim(keys.at(static_cast<size_t>(slot)).cls.dim) != 0) continue;
    std::vector<ExtKey> nk;
    for (int s = 0; s < t.arity; ++s) {
      if (s != slot) nk.push_back(keys[static_cast<size_t>(s)]);
    }
    out.add(nk, coeff);
  }
  return out;
}

Scalar HallContext::counit(const ExtendedElement& a) const {
  Scalar s = field_->zero();
  for (const auto& [k, c] : a.terms) {
    if (total_dim(k.cls.dim) == 0) s += c;
  }
  return s;
}

Tensor HallContext::tensor_mul(const Tensor& a, const Tensor& b) const {
  if (a.arity != b.arity || a.flavor != b.flavor) throw ConfigError("tensor shapes differ");
  Tensor out;
  out.flavor = a.flavor;
  out.arity = a.arity;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      // Expand the product factor by factor.
      std::vector<std::pair<std::vector<ExtKey>, Scalar>> partial{{{}, ca * cb}};
      for (int s = 0; s < a.arity; ++s) {
        ExtendedElement x;
        x.flavor = a.flavor;
        x.add(ka[static_cast<size_t>(s)], field_->one());
        ExtendedElement y;
        y.flavor = a.flavor;
        y.add(kb[static_cast<size_t>(s)], field_->one());
        const ExtendedElement xy = ext_mul(x, y);
        std::vector<std::pair<std::vector<ExtKey>, Scalar>> next;
        for (const auto& [pk, pc] : partial) {
          for (const auto& [k, c] : xy.terms) {
            auto nk = pk;
            nk.push_back(k);
            next.emplace_back(std::move(nk), pc * c);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [k, c] : partial) out.add(k, c);
    }
  }
  return out;
}

Scalar HallContext::pairing(const ExtendedElement& plus, const ExtendedElement& minus) const {
  if (plus.flavor != Flavor::plus || minus.flavor != Flavor::minus) throw ConfigError("pairing takes (plus, minus)");
  Scalar s = field_->zero();
  for (const auto& [ka, ca] : plus.terms) {
    for (const auto& [kb, cb] : minus.terms) {
      if (ka.cls != kb.cls) continue;
      const int e = -symmetric_form(q_, ka.mu, kb.mu) - symmetric_form(q_, ka.cls.dim, kb.mu) +
                    symmetric_form(q_, ka.mu, kb.cls.dim);
      mpq_class size(1);
      for (int k = 0; k < total_dim(ka.cls.dim); ++k) size *= p_;
      size /= static_cast<unsigned long>(aut(ka.cls));
      s += ca * cb * field_->v_pow(e) * size;
    }
  }
  return s;
}

Scalar HallContext::pairing(const Tensor& plus, const Tensor& minus) const {
  if (plus.arity != minus.arity) throw ConfigError("tensor arities differ");
  Scalar s = field_->zero();
  for (const auto& [ka, ca] : plus.terms) {
    for (const auto& [kb, cb] : minus.terms) {
      Scalar term = ca * cb;
      for (int k = 0; k < plus.arity && !term.is_zero(); ++k) {
        term *= pairing(ext(Flavor::plus, ka[static_cast<size_t>(k)].mu, ka[static_cast<size_t>(k)].cls),
                        ext(Flavor::minus, kb[static_cast<size_t>(k)].mu, kb[static_cast<size_t>(k)].cls));
      }
      s += term;
    }
  }
  return s;
}

OrbitFunction hall_to_function(const HallContext& ctx, const HallElement& a) {
  if (a.terms.empty()) throw ConfigError("hall_to_function needs a nonzero homogeneous element");
  const DimVector d = a.terms.begin()->first.dim;
  OrbitFunction f = OrbitFunction::zero(ctx.classes(d), ctx.field());
  int dim_g = 0;
  for (int x : d) dim_g += x * x;
  const Scalar w = ctx.field()->v_pow(total_dim(d) - dim_g);
  for (const auto& [k, c] : a.terms) {
    if (k.dim != d) throw ConfigError("hall_to_function needs a homogeneous element");
    f.values[static_cast<size_t>(k.label)] += c * w;
  }
  return f;
}

Scalar quantum_factorial(const Field& f, int m) {
  Scalar r = f->one();
  const Scalar den = (f->v() - f->v_pow(-1)).inv();
  for (int h = 1; h <= m; ++h) r *= (f->v_pow(h) - f->v_pow(-h)) * den;
  return r;
}

}  // namespace hallforge
