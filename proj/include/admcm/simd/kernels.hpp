#pragma once

// Data-parallel inner loops used by cover enumeration and by the exact
// elimination behind the homology routines. Every kernel has a portable scalar
// reference; vectorised variants are picked at runtime and must agree with it
// bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace admcm::simd {

struct KernelTable {
  const char* name;

  /// Index of the first mask m in `edges` with (m & set) == 0, or -1.
  std::ptrdiff_t (*first_unhit)(std::span<const std::uint64_t> edges, std::uint64_t set);

  /// OR of (m & set) over all masks m meeting `set` in exactly one bit.
  /// A member v of `set` appears in the result iff it owns a private edge.
  std::uint64_t (*private_union)(std::span<const std::uint64_t> edges, std::uint64_t set);

  /// dst ^= src over GF(2)-packed rows. Sizes must match.
  void (*xor_row)(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

  /// dst[k] = (dst[k] + factor * src[k]) mod p for p < 2^31, entries and
  /// factor already reduced. Sizes must match.
  void (*axpy_mod)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                   std::uint32_t factor, std::uint32_t p);
};

const KernelTable& scalar_kernels();

/// AVX2 variant, or nullptr when it was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Kernels used by the library. Chosen on first use: the ADMCM_SIMD environment
/// variable ("scalar", "avx2", "auto") overrides CPU detection.
const KernelTable& active();

/// Forces a variant by name; returns false (leaving the choice unchanged) if
/// the name is unknown or the variant is unavailable.
bool select(std::string_view name);

}  // namespace admcm::simd
