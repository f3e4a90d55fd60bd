// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached through the dispatcher.

#include <immintrin.h>

#include "hallforge/kernels.hpp"

namespace hallforge::kernels::avx2 {

void gf2_apply(const std::uint64_t* cols, int ncols, const std::uint64_t* in, std::uint64_t* out, std::size_t n) {
  std::size_t k = 0;
  const __m256i one = _mm256_set1_epi64x(1);
  for (; k + 4 <= n; k += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k));
    __m256i acc = _mm256_setzero_si256();
    for (int b = 0; b < ncols; ++b) {
      // All-ones lanes where bit b is set.
      const __m256i bit = _mm256_and_si256(_mm256_srli_epi64(x, b), one);
      const __m256i sel = _mm256_sub_epi64(_mm256_setzero_si256(), bit);
      acc = _mm256_xor_si256(acc, _mm256_and_si256(sel, _mm256_set1_epi64x(static_cast<long long>(cols[b]))));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), acc);
  }
  if (k < n) scalar::gf2_apply(cols, ncols, in + k, out + k, n - k);
}

void masked_parity(const std::uint64_t* in, std::uint64_t mask, std::uint8_t* out, std::size_t n) {
  std::size_t k = 0;
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  for (; k + 4 <= n; k += 4) {
    __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k)), m);
    // Fold the 64 bits of each lane down to bit 0.
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 32));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 16));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 8));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 4));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 2));
    x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 1));
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), x);
    for (int l = 0; l < 4; ++l) out[k + static_cast<std::size_t>(l)] = static_cast<std::uint8_t>(lanes[l] & 1);
  }
  if (k < n) scalar::masked_parity(in + k, mask, out + k, n - k);
}

}  // namespace hallforge::kernels::avx2
