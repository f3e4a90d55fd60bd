// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "hallforge/error.hpp"
#include "hallforge/scalar.hpp"

using namespace hallforge;

namespace {

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<mpq_class> c;
  for (int k = 0; k < f->degree(); ++k) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return Scalar(f, c);
}

}  // namespace

TEST_CASE("field construction") {
  auto f2 = make_field(2);
  CHECK(f2->conductor() == 8);
  CHECK(f2->degree() == 4);
  CHECK(f2->v() * f2->v() == f2->integer(2));
  CHECK(f2->v() == f2->zeta(1) + f2->zeta(-1));

  auto f3 = make_field(3);
  CHECK(f3->conductor() == 12);
  CHECK(f3->degree() == 4);
  CHECK(f3->v() * f3->v() == f3->integer(3));

  auto f5 = make_field(5);
  CHECK(f5->v() * f5->v() == f5->integer(5));

  CHECK_THROWS_AS(make_field(4), ConfigError);
  CHECK_THROWS_AS(make_field(1), ConfigError);
}

TEST_CASE("basic arithmetic at p = 2") {
  auto f = make_field(2);
  const Scalar v = f->v();
  CHECK(v * v == f->integer(2));
  CHECK(v.inv() == v * mpq_class(1, 2));
  CHECK((v * v - f->one()).inv() == f->one());
  CHECK_THROWS(f->zero().inv());
  auto g = make_field(3);
  CHECK_THROWS_AS(f->one() + g->one(), ConsistencyError);
}

TEST_CASE("v powers") {
  for (int p : {2, 3, 5}) {
    auto f = make_field(p);
    CHECK(f->v_pow(0) == f->one());
    CHECK(f->v_pow(2) == f->integer(p));
    CHECK(f->v_pow(-1) == f->v() * mpq_class(1, p));
    for (int a = -20; a <= 20; a += 3) {
      for (int b = -20; b <= 20; b += 5) CHECK(f->v_pow(a) * f->v_pow(b) == f->v_pow(a + b));
    }
  }
}

TEST_CASE("roots of unity") {
  for (int p : {2, 3, 5, 7}) {
    auto f = make_field(p);
    Scalar sum = f->zero();
    Scalar pow = f->one();
    for (int r = 0; r < p; ++r) {
      sum += f->zeta_p(r);
      pow *= f->zeta_p(1);
    }
    CHECK(pow == f->one());
    CHECK(sum.is_zero());
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (int p : {2, 3}) {
    auto f = make_field(p);
    for (int t = 0; t < 30; ++t) {
      const Scalar a = random_scalar(f, rng);
      const Scalar b = random_scalar(f, rng);
      const Scalar c = random_scalar(f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inv() == f->one());
    }
  }
}

TEST_CASE("json round trip") {
  auto f = make_field(3);
  const Scalar s = f->v() * mpq_class(3, 7) + f->zeta(5);
  const auto j = to_json(s);
  CHECK(j["conductor"] == 12);
  CHECK(scalar_from_json(f, j) == s);
  auto g = make_field(2);
  CHECK_THROWS(scalar_from_json(g, j));
}
