#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace admcm {

/// Uniform integer in [0, bound) by rejection. Unlike
/// std::uniform_int_distribution, the result sequence is the same on every
/// standard library, which keeps seeded generators reproducible.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void portable_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

}  // namespace admcm
