// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <cstring>

#include "hallforge/kernels.hpp"

namespace hallforge::kernels {

bool avx2_available() {
#if defined(HALLFORGE_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Isa detect() {
  const char* env = std::getenv("HALLFORGE_SIMD");
  if (env != nullptr && (std::strcmp(env, "off") == 0 || std::strcmp(env, "scalar") == 0)) return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void gf2_apply(const std::uint64_t* cols, int ncols, const std::uint64_t* in, std::uint64_t* out, std::size_t n) {
#ifdef HALLFORGE_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::gf2_apply(cols, ncols, in, out, n);
#endif
  scalar::gf2_apply(cols, ncols, in, out, n);
}

void masked_parity(const std::uint64_t* in, std::uint64_t mask, std::uint8_t* out, std::size_t n) {
#ifdef HALLFORGE_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::masked_parity(in, mask, out, n);
#endif
  scalar::masked_parity(in, mask, out, n);
}

}  // namespace hallforge::kernels
