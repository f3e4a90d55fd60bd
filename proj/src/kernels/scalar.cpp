// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>

#include "hallforge/kernels.hpp"

namespace hallforge::kernels::scalar {

void gf2_apply(const std::uint64_t* cols, int ncols, const std::uint64_t* in, std::uint64_t* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t x = in[k];
    std::uint64_t acc = 0;
    while (x != 0) {
      const int b = std::countr_zero(x);
      if (b >= ncols) break;
      acc ^= cols[b];
      x &= x - 1;
    }
    out[k] = acc;
  }
}

void masked_parity(const std::uint64_t* in, std::uint64_t mask, std::uint8_t* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint8_t>(std::popcount(in[k] & mask) & 1);
}

}  // namespace hallforge::kernels::scalar
