#include "admcm/simd/kernels.hpp"

#include <bit>
#include <cassert>

namespace admcm::simd {
namespace {

std::ptrdiff_t first_unhit(std::span<const std::uint64_t> edges, std::uint64_t set) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((edges[i] & set) == 0) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::uint64_t private_union(std::span<const std::uint64_t> edges, std::uint64_t set) {
  std::uint64_t acc = 0;
  for (std::uint64_t e : edges) {
    const std::uint64_t hit = e & set;
    if (std::popcount(hit) == 1) acc |= hit;
  }
  return acc;
}

void xor_row(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  assert(dst.size() == src.size());
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  assert(dst.size() == src.size());
  for (std::size_t k = 0; k < dst.size(); ++k)
    dst[k] = static_cast<std::uint32_t>(
        (std::uint64_t{dst[k]} + std::uint64_t{factor} * src[k]) % p);
}

constexpr KernelTable kScalar{"scalar", first_unhit, private_union, xor_row, axpy_mod};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace admcm::simd
