// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>
#include <cassert>

#include "admcm/simd/kernels.hpp"

namespace admcm::simd {
namespace {

inline __m256i load4(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

std::ptrdiff_t first_unhit(std::span<const std::uint64_t> edges, std::uint64_t set) {
  const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(set));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= edges.size(); i += 4) {
    const __m256i hit = _mm256_and_si256(load4(edges.data() + i), mask);
    const int lanes = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(hit, zero)));
    if (lanes != 0) return static_cast<std::ptrdiff_t>(i + std::countr_zero(static_cast<unsigned>(lanes)));
  }
  for (; i < edges.size(); ++i)
    if ((edges[i] & set) == 0) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::uint64_t private_union(std::span<const std::uint64_t> edges, std::uint64_t set) {
  const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(set));
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  __m256i acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= edges.size(); i += 4) {
    const __m256i hit = _mm256_and_si256(load4(edges.data() + i), mask);
    // hit is a single bit iff hit != 0 and (hit & (hit - 1)) == 0.
    const __m256i below = _mm256_sub_epi64(hit, one);
    const __m256i pow2 = _mm256_cmpeq_epi64(_mm256_and_si256(hit, below), zero);
    const __m256i nonzero = _mm256_cmpeq_epi64(hit, zero);
    const __m256i single = _mm256_andnot_si256(nonzero, pow2);
    acc = _mm256_or_si256(acc, _mm256_and_si256(hit, single));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t out = lanes[0] | lanes[1] | lanes[2] | lanes[3];
  for (; i < edges.size(); ++i) {
    const std::uint64_t hit = edges[i] & set;
    if (std::popcount(hit) == 1) out |= hit;
  }
  return out;
}

void xor_row(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  assert(dst.size() == src.size());
  std::size_t k = 0;
  for (; k + 4 <= dst.size(); k += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + k);
    const __m256i v = _mm256_xor_si256(_mm256_loadu_si256(d), load4(src.data() + k));
    _mm256_storeu_si256(d, v);
  }
  for (; k < dst.size(); ++k) dst[k] ^= src[k];
}

// Shoup multiplication: with w = floor(factor * 2^32 / p), the quotient
// estimate q = floor(x * w / 2^32) satisfies x*factor - q*p in [0, 2p).
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  assert(dst.size() == src.size());
  const auto shoup = static_cast<std::uint32_t>((std::uint64_t{factor} << 32) / p);
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t k = 0;
  for (; k + 8 <= dst.size(); k += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + k);
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + k));
    const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, vw), 32);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vw);
    const __m256i q = _mm256_blend_epi32(even, odd, 0b10101010);
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, vf), _mm256_mullo_epi32(q, vp));
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
    __m256i s = _mm256_add_epi32(_mm256_loadu_si256(d), r);
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(d, s);
  }
  for (; k < dst.size(); ++k)
    dst[k] = static_cast<std::uint32_t>(
        (std::uint64_t{dst[k]} + std::uint64_t{factor} * src[k]) % p);
}

constexpr KernelTable kAvx2{"avx2", first_unhit, private_union, xor_row, axpy_mod};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace admcm::simd
