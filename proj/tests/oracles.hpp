#pragma once

// Slow, obviously-correct reference computations for the tests. None of them
// share code with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "admcm/clutter.hpp"
#include "admcm/grid.hpp"
#include "admcm/ideal.hpp"

namespace oracle {

using admcm::Clutter;
using admcm::VertexSet;

inline bool covers_all(const Clutter& c, std::uint64_t s) {
  for (VertexSet e : c.edges())
    if ((e.bits() & s) == 0) return false;
  return true;
}

/// Minimal vertex covers by filtering all 2^n subsets.
inline std::vector<VertexSet> minimal_covers(const Clutter& c) {
  const int n = c.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!covers_all(c, s)) continue;
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v)
      if ((s >> v & 1u) && covers_all(c, s & ~(std::uint64_t{1} << v))) minimal = false;
    if (minimal) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank of an integer matrix mod p by textbook elimination on int64 entries.
inline std::size_t rank(std::vector<std::vector<long long>> m, long long p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    long long inv = 1;
    for (long long e = p - 2, b = m[r][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long f = m[i][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Admissibility of a single set, read literally: collect the colors met (at most once each),
/// require them to be 1..k, then read the block subscripts in color order.
inline bool admissible_set(const admcm::GridStructure& grid, VertexSet e) {
  std::vector<int> colors_met, blocks;
  for (int i = 1; i <= grid.d(); ++i) {
    const VertexSet part = e & grid.color_class(i);
    if (part.size() > 1) return false;
    if (part.size() == 1) {
      colors_met.push_back(i);
      int j = 0;
      for (int b = 1; b <= grid.g(); ++b)
        if (grid.block(b).contains(part.lowest())) j = b;
      blocks.push_back(j);
    }
  }
  if (static_cast<int>(colors_met.size()) != e.size()) return false;  // a vertex outside every color
  for (std::size_t l = 0; l < colors_met.size(); ++l)
    if (colors_met[l] != static_cast<int>(l) + 1) return false;
  for (std::size_t l = 1; l < blocks.size(); ++l)
    if (blocks[l - 1] > blocks[l] || blocks[l] == 0) return false;
  return blocks.empty() || blocks[0] != 0;
}

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// For an ordering with linear quotients, beta_i = sum_k C(r_k, i), where r_k
/// is the number of variables generating the k-th colon ideal; the table lives
/// on the strand j = i + q. Returns {} if some colon is not linear.
inline std::vector<long long> betti_from_linear_quotients(const admcm::SquareFreeIdeal& ideal,
                                                          const std::vector<std::size_t>& order) {
  const auto& gens = ideal.generators();
  std::vector<long long> beta;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const VertexSet u = gens[order[k]];
    VertexSet vars;
    for (std::size_t j = 0; j < k; ++j) {
      const VertexSet q = gens[order[j]] - u;
      if (q.size() == 1) vars |= q;
    }
    for (std::size_t j = 0; j < k; ++j)
      if (!(gens[order[j]] - u).intersects(vars)) return {};
    const int r = vars.size();
    if (beta.size() < static_cast<std::size_t>(r) + 1) beta.resize(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i <= r; ++i) beta[static_cast<std::size_t>(i)] += binom(r, i);
  }
  return beta;
}

}  // namespace oracle
