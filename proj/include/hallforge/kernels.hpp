// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

// Bit-level kernels for the p = 2 hot loops. Each kernel has a scalar
// reference and an AVX2 variant; the variant is picked once at runtime.

namespace hallforge::kernels {

enum class Isa { scalar, avx2 };

/// Best available variant, unless HALLFORGE_SIMD=off forces scalar.
Isa active_isa();
const char* isa_name(Isa isa);

/// out[k] = XOR of cols[b] over the set bits b of in[k], for b < ncols.
/// This applies an F_2-linear map, given by its column images, to a batch.
void gf2_apply(const std::uint64_t* cols, int ncols, const std::uint64_t* in, std::uint64_t* out, std::size_t n);

/// out[k] = parity of popcount(in[k] & mask).
void masked_parity(const std::uint64_t* in, std::uint64_t mask, std::uint8_t* out, std::size_t n);

namespace scalar {
void gf2_apply(const std::uint64_t* cols, int ncols, const std::uint64_t* in, std::uint64_t* out, std::size_t n);
void masked_parity(const std::uint64_t* in, std::uint64_t mask, std::uint8_t* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
/// Only call when the CPU supports AVX2.
void gf2_apply(const std::uint64_t* cols, int ncols, const std::uint64_t* in, std::uint64_t* out, std::size_t n);
void masked_parity(const std::uint64_t* in, std::uint64_t mask, std::uint8_t* out, std::size_t n);
}  // namespace avx2

/// Whether the AVX2 variant was compiled in and is usable on this CPU.
bool avx2_available();

}  // namespace hallforge::kernels
