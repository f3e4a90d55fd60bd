// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "hallforge/error.hpp"
#include "hallforge/fourier.hpp"

using namespace hallforge;

namespace {

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << n); ++m) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k) {
      if ((m >> k) & 1) s.push_back(k);
    }
    out.push_back(s);
  }
  return out;
}

OrbitFunction random_function(const Quiver& q, int p, const DimVector& nu, const Field& f, std::mt19937& rng) {
  auto t = orbits(q, p, nu);
  OrbitFunction g = OrbitFunction::zero(t, f);
  std::uniform_int_distribution<int> d(-3, 3);
  for (auto& v : g.values) v = f->integer(d(rng)) + f->zeta(d(rng) + 3) * mpq_class(d(rng));
  return g;
}

// Character sum computed from decoded matrices, one target point at a time.
std::vector<Scalar> brute_fourier(const OrbitFunction& f, const std::vector<int>& flip) {
  const Quiver& q = f.quiver();
  const int p = f.table->prime();
  const Field& field = f.field();
  const Quiver t = reorient(q, flip);
  const auto src = enumerate_points(q, p, f.dim());
  const auto tgt = enumerate_points(t, p, f.dim());
  int d = 0;
  for (int h : flip) d += f.dim()[static_cast<size_t>(q.arrow(h).source)] * f.dim()[static_cast<size_t>(q.arrow(h).target)];
  std::vector<Scalar> out;
  for (const auto& y : tgt) {
    Scalar acc = field->zero();
    for (std::uint64_t k = 0; k < src.size(); ++k) {
      const auto& x = src[k];
      bool same = true;
      long tr = 0;
      for (int h = 0; h < q.arrow_count(); ++h) {
        const bool flipped = std::find(flip.begin(), flip.end(), h) != flip.end();
        if (!flipped) {
          same = same && x.mats[static_cast<size_t>(h)] == y.mats[static_cast<size_t>(h)];
          continue;
        }
        const GFMatrix prod = y.mats[static_cast<size_t>(h)] * x.mats[static_cast<size_t>(h)];
        long s = 0;
        for (int r = 0; r < prod.rows(); ++r) s += prod.at(r, r);
        tr += (q.arrow(h).reversed ? -1 : 1) * s;
      }
      if (!same) continue;
      acc += f.at_point(k) * field->zeta_p(tr);
    }
    out.push_back(acc * field->v_pow(-d));
  }
  return out;
}

}  // namespace

TEST_CASE("function product examples") {
  const Quiver a1 = preset_quiver("a1");
  const Field f = make_field(2);
  auto t1 = orbits(a1, 2, {1});
  auto t0 = orbits(a1, 2, {0});
  const auto one_i = OrbitFunction::indicator(t1, 0, f);
  const auto prod = fn_mul(one_i, one_i);
  REQUIRE(prod.values.size() == 1);
  CHECK(prod.values[0] == f->v_pow(-1) * mpq_class(3));
  const auto unit = OrbitFunction::constant(t0, f->one());
  CHECK(fn_mul(unit, one_i) == one_i);
  CHECK(fn_mul(one_i, unit) == one_i);
  CHECK(m_form(a1, {1}, {1}) == 1);
}

TEST_CASE("function product matches Hall numbers") {
  for (const char* name : {"a2", "kronecker"}) {
    const Quiver q = preset_quiver(name);
    const Field f = make_field(2);
    for (const DimVector& a : {DimVector{1, 0}, DimVector{0, 1}, DimVector{1, 1}}) {
      for (const DimVector& b : {DimVector{1, 0}, DimVector{0, 1}}) {
        auto ta = orbits(q, 2, a);
        auto tb = orbits(q, 2, b);
        auto tg = orbits(q, 2, a + b);
        for (int la = 0; la < ta->size(); ++la) {
          for (int lb = 0; lb < tb->size(); ++lb) {
            const auto prod = fn_mul(OrbitFunction::indicator(ta, la, f), OrbitFunction::indicator(tb, lb, f));
            for (int g = 0; g < tg->size(); ++g) {
              const auto n = hall_number(q, 2, a + b, g, a, la, b, lb);
              CHECK(prod.values[static_cast<size_t>(g)] ==
                    f->v_pow(-m_form(q, a, b)) * mpq_class(static_cast<unsigned long>(n)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("function product rejects mismatched factors") {
  const Quiver qh = Quiver::enlarge(preset_quiver("a1"));
  const Field f = make_field(2);
  auto t = orbits(qh, 2, {1, 1});
  const auto g = OrbitFunction::constant(t, f->one());
  CHECK_THROWS_AS(fn_mul(g, g), ConfigError);
}

TEST_CASE("fourier examples") {
  const Quiver qh = Quiver::enlarge(preset_quiver("a1"));
  const Field f = make_field(2);
  auto t = orbits(qh, 2, {1, 1});
  const auto c = OrbitFunction::constant(t, f->one());
  CHECK(fourier(c, {}) == c);
  const auto phi = fourier(c, {0});
  const int zero_label = phi.table->label(0);
  CHECK(phi.values[static_cast<size_t>(zero_label)] == f->v());
  CHECK(phi.values[static_cast<size_t>(1 - zero_label)].is_zero());
}

TEST_CASE("fourier agrees with the trace oracle") {
  std::mt19937 rng(11);
  for (int p : {2, 3}) {
    const Field f = make_field(p);
    const Quiver qh = Quiver::enlarge(preset_quiver("a2"));
    for (const DimVector& nu : {DimVector{1, 1, 1, 0}, DimVector{1, 1, 0, 1}, DimVector{2, 1, 1, 0}}) {
      if (p == 3 && total_dim(nu) > 4) continue;
      const auto g = random_function(qh, p, nu, f, rng);
      for (const auto& flip : subsets(qh.arrow_count())) {
        const auto pw = fourier_pointwise(g, flip);
        CHECK(pw == brute_fourier(g, flip));
        const auto phi = fourier(g, flip);
        CHECK(is_invariant(*phi.table, pw));
        for (std::uint64_t y = 0; y < pw.size(); ++y) CHECK(phi.at_point(y) == pw[y]);
      }
    }
  }
}

TEST_CASE("fourier composition law") {
  std::mt19937 rng(5);
  for (int p : {2, 3, 5}) {
    const Field f = make_field(p);
    const Quiver qh = Quiver::enlarge(preset_quiver("a2"));
    const DimVector nu = p == 5 ? DimVector{1, 1, 1, 0} : DimVector{1, 1, 1, 1};
    const auto g = random_function(qh, p, nu, f, rng);
    const auto all = subsets(qh.arrow_count());
    for (const auto& s1 : all) {
      const Quiver q1 = reorient(qh, s1);
      const auto g1 = fourier(g, s1);
      // Going back undoes the transform.
      CHECK(fourier(g1, s1) == g);
      for (const auto& s2 : all) {
        const Quiver q2 = reorient(q1, s2);
        const auto direct = fourier_between(qh, q2, p, nu, f).apply(g.values);
        CHECK(fourier(g1, s2).values == direct);
      }
    }
  }
}

TEST_CASE("fourier multiplicativity on plain quivers") {
  const Field f = make_field(2);
  for (const char* name : {"a2", "kronecker"}) {
    const Quiver q = preset_quiver(name);
    for (const DimVector& a : {DimVector{1, 0}, DimVector{0, 1}, DimVector{1, 1}}) {
      for (const DimVector& b : {DimVector{1, 0}, DimVector{0, 1}, DimVector{1, 1}}) {
        if (total_dim(a + b) > 3) continue;
        auto ta = orbits(q, 2, a);
        auto tb = orbits(q, 2, b);
        for (int la = 0; la < ta->size(); ++la) {
          for (int lb = 0; lb < tb->size(); ++lb) {
            const auto fa = OrbitFunction::indicator(ta, la, f);
            const auto fb = OrbitFunction::indicator(tb, lb, f);
            for (const auto& flip : subsets(q.arrow_count())) {
              CHECK(fourier(fn_mul(fa, fb), flip) == fn_mul(fourier(fa, flip), fourier(fb, flip)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("fourier multiplicativity on framed quivers") {
  for (int p : {2, 3}) {
    const Field f = make_field(p);
    for (const char* name : {"a1", "a2"}) {
      const Quiver q = preset_quiver(name);
      const Quiver qh = Quiver::enlarge(q);
      const int n = q.vertex_count();
      const int cap = p == 2 ? 3 : 2;
      // Left factors on the plain quiver, right factors on the framed one.
      for (int ma = 0; ma < (1 << (2 * n)); ++ma) {
        DimVector a(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = (ma >> (2 * i)) & 3;
        if (total_dim(a) == 0 || total_dim(a) > cap) continue;
        for (int mb = 0; mb < (1 << (4 * n)); ++mb) {
          DimVector b(static_cast<size_t>(2 * n));
          for (int i = 0; i < 2 * n; ++i) b[static_cast<size_t>(i)] = (mb >> (2 * i)) & 3;
          if (total_dim(b) == 0 || total_dim(a) + total_dim(b) > cap) continue;
          auto ta = orbits(q, p, a);
          auto tb = orbits(qh, p, b);
          for (int la = 0; la < ta->size(); ++la) {
            for (int lb = 0; lb < tb->size(); ++lb) {
              const auto fa = OrbitFunction::indicator(ta, la, f);
              const auto fb = OrbitFunction::indicator(tb, lb, f);
              const auto prod = fn_mul(fa, fb);
              for (const auto& flip : subsets(qh.arrow_count())) {
                std::vector<int> base_flip;
                for (int h : flip) {
                  if (h < q.arrow_count()) base_flip.push_back(h);
                }
                CHECK(fourier(prod, flip) == fn_mul(fourier(fa, base_flip), fourier(fb, flip)));
              }
            }
          }
        }
      }
    }
  }
}
