// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "hallforge/error.hpp"
#include "hallforge/hall.hpp"

using namespace hallforge;

namespace {

std::vector<ClassKey> all_classes(const HallContext& ctx, int n) {
  std::vector<ClassKey> out;
  for (const auto& d : ctx.dims_up_to(n)) {
    for (const auto& k : ctx.classes_of_dim(d)) out.push_back(k);
  }
  return out;
}

bool fits(const DimVector& d, const DimVector& cap) {
  for (size_t k = 0; k < d.size(); ++k) {
    if (d[k] > cap[k]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hall product examples") {
  HallContext a1(preset_quiver("a1"), 2);
  const Field& f = a1.field();
  const auto ui = a1.u(a1.simple(0));
  const auto sq = a1.mul(ui, ui);
  REQUIRE(sq.terms.size() == 1);
  CHECK(sq.terms.begin()->first.dim == DimVector{2});
  CHECK(sq.terms.begin()->second == f->v() * mpq_class(3));
  CHECK(a1.mul(a1.one(), ui) == ui);
  CHECK(a1.mul(ui, a1.one()) == ui);
  CHECK(a1.mul(ui, ui, false).terms.begin()->second == f->integer(3));

  HallContext a2(preset_quiver("a2"), 2);
  const auto p12 = a2.mul(a2.u(a2.simple(0)), a2.u(a2.simple(1)));
  CHECK(p12.terms.size() == 2);
  for (const auto& [k, c] : p12.terms) CHECK(c == f->v_pow(-1));
  // With the arrow 0 -> 1, S_1 on the left admits only the split extension.
  const auto p21 = a2.mul(a2.u(a2.simple(1)), a2.u(a2.simple(0)));
  CHECK(p21.terms.size() == 1);
  CHECK(p21.terms.begin()->first == a2.semisimple({1, 1}));
}

TEST_CASE("hall substrate numbers") {
  HallContext a1(preset_quiver("a1"), 2);
  const auto i = a1.simple(0);
  const auto ii = a1.semisimple({2});
  CHECK(a1.hall(ii, i, i) == 3);
  CHECK(a1.aut(ii) == 6);
  HallContext a1p3(preset_quiver("a1"), 3);
  CHECK(a1p3.hall(a1p3.semisimple({2}), a1p3.simple(0), a1p3.simple(0)) == 4);
}

TEST_CASE("hall product is associative") {
  struct Case {
    const char* name;
    int n;
    DimVector cap;
  };
  for (const Case& cs : {Case{"a1", 3, {3}}, Case{"a2", 4, {2, 2}}}) {
    HallContext ctx(preset_quiver(cs.name), 2);
    const auto cls = all_classes(ctx, cs.n);
    for (bool tw : {true, false}) {
      for (const auto& a : cls) {
        for (const auto& b : cls) {
          if (!fits(a.dim + b.dim, cs.cap)) continue;
          const auto ab = ctx.mul(ctx.u(a), ctx.u(b), tw);
          for (const auto& c : cls) {
            if (!fits(a.dim + b.dim + c.dim, cs.cap)) continue;
            const auto lhs = ctx.mul(ab, ctx.u(c), tw);
            const auto rhs = ctx.mul(ctx.u(a), ctx.mul(ctx.u(b), ctx.u(c), tw), tw);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("function realization is an algebra morphism") {
  for (int p : {2, 3}) {
    for (const char* name : {"a1", "a2", "kronecker"}) {
      HallContext ctx(preset_quiver(name), p);
      const int n = p == 2 ? 3 : 2;
      const auto cls = all_classes(ctx, n);
      for (const auto& a : cls) {
        for (const auto& b : cls) {
          if (total_dim(a.dim + b.dim) > n) continue;
          const auto lhs = hall_to_function(ctx, ctx.mul(ctx.u(a), ctx.u(b)));
          const auto rhs = fn_mul(hall_to_function(ctx, ctx.u(a)), hall_to_function(ctx, ctx.u(b)));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("function realization examples") {
  HallContext a1(preset_quiver("a1"), 2);
  const auto f0 = hall_to_function(a1, a1.one());
  CHECK(f0.values == std::vector<Scalar>{a1.field()->one()});
  CHECK(hall_to_function(a1, a1.u(a1.simple(0))).values[0] == a1.field()->one());
  CHECK(hall_to_function(a1, a1.u(a1.semisimple({2}))).values[0] == a1.field()->v_pow(-2));
  HallElement mixed = a1.u(a1.simple(0));
  mixed.add(a1.semisimple({2}), a1.field()->one());
  CHECK_THROWS_AS(hall_to_function(a1, mixed), ConfigError);
}

TEST_CASE("extended products") {
  HallContext a1(preset_quiver("a1"), 2);
  const Field& f = a1.field();
  const auto Ki = a1.K(Flavor::plus, {1});
  CHECK(a1.ext_mul(Ki, a1.K(Flavor::plus, {2})) == a1.K(Flavor::plus, {3}));
  const auto ui = a1.ext(Flavor::plus, {0}, a1.simple(0));
  // u_i K_i = v^{-2} K_i u_i.
  const auto uk = a1.ext_mul(ui, Ki);
  REQUIRE(uk.terms.size() == 1);
  CHECK(uk.terms.begin()->first == ExtKey{{1}, a1.simple(0)});
  CHECK(uk.terms.begin()->second == f->v_pow(-2));
  const auto um = a1.ext(Flavor::minus, {0}, a1.simple(0));
  CHECK(a1.ext_mul(um, a1.K(Flavor::minus, {1})).terms.begin()->second == f->v_pow(2));
  const auto sq = a1.ext_mul(ui, ui);
  CHECK(sq.terms.begin()->second == f->v() * mpq_class(3));
  CHECK_THROWS_AS(a1.ext_mul(ui, um), ConfigError);
}

TEST_CASE("coproduct examples") {
  HallContext a1(preset_quiver("a1"), 2);
  const Field& f = a1.field();
  const auto dk = a1.comultiply(a1.K(Flavor::plus, {2}));
  REQUIRE(dk.terms.size() == 1);
  CHECK(dk.terms.begin()->first == std::vector<ExtKey>{{{2}, a1.zero_class()}, {{2}, a1.zero_class()}});

  const auto du = a1.comultiply(a1.ext(Flavor::plus, {0}, a1.simple(0)));
  CHECK(du.terms.size() == 2);
  const std::vector<ExtKey> left{{{0}, a1.simple(0)}, {{0}, a1.zero_class()}};
  const std::vector<ExtKey> right{{{1}, a1.zero_class()}, {{0}, a1.simple(0)}};
  CHECK(du.terms.at(left) == f->one());
  CHECK(du.terms.at(right) == f->one());

  // v (1/6) 3 u_i K_i (x) u_i, moved to the K-left basis.
  const auto d2 = a1.comultiply(a1.ext(Flavor::plus, {0}, a1.semisimple({2})));
  const std::vector<ExtKey> mid{{{1}, a1.simple(0)}, {{0}, a1.simple(0)}};
  CHECK(d2.terms.at(mid) == f->v_pow(1 - 2) * mpq_class(1, 2));
}

TEST_CASE("coassociativity and counit") {
  for (const char* name : {"a1", "a2"}) {
    HallContext ctx(preset_quiver(name), 2);
    const int nv = ctx.quiver().vertex_count();
    for (Flavor fl : {Flavor::plus, Flavor::minus}) {
      for (const auto& c : all_classes(ctx, 3)) {
        const DimVector mu(static_cast<size_t>(nv), 1);
        const auto x = ctx.ext(fl, mu, c);
        const auto d = ctx.comultiply(x);
        CHECK(ctx.comultiply_slot(d, 0) == ctx.comultiply_slot(d, 1));
        const auto t = ctx.as_tensor(x);
        CHECK(ctx.counit_slot(d, 0) == t);
        CHECK(ctx.counit_slot(d, 1) == t);
      }
    }
  }
}

TEST_CASE("counit examples") {
  HallContext a1(preset_quiver("a1"), 2);
  const Field& f = a1.field();
  CHECK(a1.counit(a1.K(Flavor::plus, {3})) == f->one());
  CHECK(a1.counit(a1.ext(Flavor::plus, {0}, a1.simple(0))).is_zero());
  ExtendedElement e = a1.K(Flavor::plus, {0});
  e.add(ExtKey{{0}, a1.simple(0)}, f->integer(2));
  CHECK(a1.counit(e) == f->one());
}

TEST_CASE("coproduct is multiplicative") {
  for (const auto& [name, p] : {std::pair{"a1", 2}, std::pair{"a2", 2}, std::pair{"a1", 3}, std::pair{"a2", 3}}) {
    HallContext ctx(preset_quiver(name), p);
    const auto cls = all_classes(ctx, 2);
    for (Flavor fl : {Flavor::plus, Flavor::minus}) {
      for (const auto& a : cls) {
        for (const auto& b : cls) {
          if (total_dim(a.dim + b.dim) > 3) continue;
          const auto x = ctx.ext(fl, a.dim, a);
          const auto y = ctx.ext(fl, ctx.zero_class().dim, b);
          INFO(name, " flavor ", static_cast<int>(fl), " a ", dim_to_string(a.dim), "#", a.label, " b ",
               dim_to_string(b.dim), "#", b.label);
          CHECK(ctx.comultiply(ctx.ext_mul(x, y)) == ctx.tensor_mul(ctx.comultiply(x), ctx.comultiply(y)));
        }
      }
    }
  }
}

TEST_CASE("pairing examples") {
  HallContext a1(preset_quiver("a1"), 2);
  const Field& f = a1.field();
  const auto up = a1.ext(Flavor::plus, {0}, a1.simple(0));
  CHECK(a1.pairing(up, a1.ext(Flavor::minus, {0}, a1.simple(0))) == f->integer(2));
  CHECK(a1.pairing(up, a1.ext(Flavor::minus, {0}, a1.semisimple({2}))).is_zero());
  CHECK(a1.pairing(a1.K(Flavor::plus, {1}), a1.K(Flavor::minus, {1})) == f->v_pow(-2));
}

TEST_CASE("pairing is compatible with products") {
  for (int p : {2, 3}) {
    HallContext a1(preset_quiver("a1"), p);
    const Field& f = a1.field();
    const auto up = a1.ext(Flavor::plus, {0}, a1.simple(0));
    const auto c = a1.ext(Flavor::minus, {0}, a1.semisimple({2}));
    const auto lhs = a1.pairing(a1.ext_mul(up, up), c);
    Tensor ab;
    ab.flavor = Flavor::plus;
    ab.add({ExtKey{{0}, a1.simple(0)}, ExtKey{{0}, a1.simple(0)}}, f->one());
    CHECK(lhs == a1.pairing(ab, a1.comultiply(c)));
    CHECK(lhs == f->v() * mpq_class(p, (p - 1) * (p - 1)));
  }
  // Every pair of A_2 classes of total dimension two.
  HallContext a2(preset_quiver("a2"), 2);
  const auto cls = all_classes(a2, 2);
  for (const auto& a : cls) {
    for (const auto& b : cls) {
      for (const auto& g : cls) {
        if (g.dim != a.dim + b.dim) continue;
        const auto x = a2.ext(Flavor::plus, a2.zero_class().dim, a);
        const auto y = a2.ext(Flavor::plus, a2.zero_class().dim, b);
        const auto c = a2.ext(Flavor::minus, a2.zero_class().dim, g);
        Tensor ab;
        ab.flavor = Flavor::plus;
        ab.add({x.terms.begin()->first, y.terms.begin()->first}, a2.field()->one());
        CHECK(a2.pairing(a2.ext_mul(x, y), c) == a2.pairing(ab, a2.comultiply(c)));
      }
    }
  }
}

TEST_CASE("quantum factorial") {
  const Field f = make_field(2);
  CHECK(quantum_factorial(f, 0) == f->one());
  CHECK(quantum_factorial(f, 1) == f->one());
  CHECK(quantum_factorial(f, 2) == f->v() + f->v_pow(-1));
}
