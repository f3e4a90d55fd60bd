// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <vector>

#include "hallforge/kernels.hpp"

using namespace hallforge;

TEST_CASE("scalar and avx2 kernels agree") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {0U, 1U, 3U, 4U, 5U, 17U, 1000U}) {
    std::vector<std::uint64_t> in(n);
    for (auto& x : in) x = rng() & 0xfffff;
    std::vector<std::uint64_t> cols(20);
    for (auto& c : cols) c = rng() & 0xfffff;
    std::vector<std::uint64_t> a(n), b(n), c(n);
    kernels::scalar::gf2_apply(cols.data(), 20, in.data(), a.data(), n);
    kernels::gf2_apply(cols.data(), 20, in.data(), c.data(), n);
    CHECK(a == c);
    std::vector<std::uint8_t> pa(n), pb(n), pc(n);
    const std::uint64_t mask = rng();
    kernels::scalar::masked_parity(in.data(), mask, pa.data(), n);
    kernels::masked_parity(in.data(), mask, pc.data(), n);
    CHECK(pa == pc);
    if (kernels::avx2_available()) {
      kernels::avx2::gf2_apply(cols.data(), 20, in.data(), b.data(), n);
      CHECK(a == b);
      kernels::avx2::masked_parity(in.data(), mask, pb.data(), n);
      CHECK(pa == pb);
    }
  }
}

TEST_CASE("gf2_apply is a linear map") {
  const std::uint64_t cols[3] = {0b011, 0b110, 0b100};
  const std::uint64_t in[4] = {0, 1, 3, 7};
  std::uint64_t out[4];
  kernels::gf2_apply(cols, 3, in, out, 4);
  CHECK(out[0] == 0);
  CHECK(out[1] == 0b011);
  CHECK(out[2] == (0b011 ^ 0b110));
  CHECK(out[3] == (0b011 ^ 0b110 ^ 0b100));
}

TEST_CASE("isa names") {
  CHECK(std::string(kernels::isa_name(kernels::Isa::scalar)) == "scalar");
  CHECK(std::string(kernels::isa_name(kernels::Isa::avx2)) == "avx2");
}
