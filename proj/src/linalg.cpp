#include "admcm/linalg.hpp"

#include <algorithm>
#include <unordered_map>

#include "admcm/errors.hpp"
#include "admcm/simd/kernels.hpp"

namespace admcm {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

constexpr std::size_t kDenseMaxCols = 5000;
constexpr std::size_t kDenseMaxBits = std::size_t{1} << 28;
constexpr std::size_t kDenseMaxWords = std::size_t{1} << 24;

std::size_t rank_dense_gf2(std::size_t cols, const std::vector<SparseRow>& rows) {
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> m(rows.size() * words, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].cols.size(); ++k)
      if (rows[r].vals[k] & 1u) m[r * words + rows[r].cols[k] / 64] ^= std::uint64_t{1} << (rows[r].cols[k] % 64);
  const auto& kern = simd::active();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < rows.size() && !(m[piv * words + w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    if (piv != rank)
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(piv * words),
                       m.begin() + static_cast<std::ptrdiff_t>((piv + 1) * words),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * words));
    std::span<const std::uint64_t> src(m.data() + rank * words + w, words - w);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (m[r * words + w] & bit) kern.xor_row(std::span<std::uint64_t>(m.data() + r * words + w, words - w), src);
    ++rank;
  }
  return rank;
}

std::size_t rank_dense_modp(std::size_t cols, const std::vector<SparseRow>& rows, const PrimeField& f) {
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> m(rows.size() * cols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].cols.size(); ++k) m[r * cols + rows[r].cols[k]] = rows[r].vals[k] % p;
  const auto& kern = simd::active();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && m[piv * cols + c] == 0) ++piv;
    if (piv == rows.size()) continue;
    if (piv != rank)
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       m.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    std::uint32_t* prow = m.data() + rank * cols;
    const std::uint32_t scale = f.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], scale);
    std::span<const std::uint32_t> src(prow + c, cols - c);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::uint32_t* row = m.data() + r * cols;
      if (row[c] != 0) kern.axpy_mod(std::span<std::uint32_t>(row + c, cols - c), src, f.neg(row[c]), p);
    }
    ++rank;
  }
  return rank;
}

// Rows are reduced one at a time against the stored pivot rows, keyed by their
// leading column; a row that survives becomes a new pivot.
std::size_t rank_sparse(const std::vector<SparseRow>& rows, const PrimeField& f) {
  const std::uint32_t p = f.characteristic();
  std::unordered_map<std::uint32_t, SparseRow> pivots;
  std::size_t rank = 0;
  SparseRow merged;
  for (const SparseRow& input : rows) {
    SparseRow row;
    for (std::size_t k = 0; k < input.cols.size(); ++k)
      if (input.vals[k] % p) {
        row.cols.push_back(input.cols[k]);
        row.vals.push_back(input.vals[k] % p);
      }
    while (!row.cols.empty()) {
      auto it = pivots.find(row.cols.front());
      if (it == pivots.end()) {
        const std::uint32_t scale = f.inv(row.vals.front());
        for (auto& v : row.vals) v = f.mul(v, scale);
        pivots.emplace(row.cols.front(), std::move(row));
        ++rank;
        break;
      }
      const SparseRow& pr = it->second;  // leading value 1
      const std::uint32_t factor = f.neg(row.vals.front());
      merged.cols.clear();
      merged.vals.clear();
      std::size_t a = 0, b = 0;
      while (a < row.cols.size() || b < pr.cols.size()) {
        if (b == pr.cols.size() || (a < row.cols.size() && row.cols[a] < pr.cols[b])) {
          merged.cols.push_back(row.cols[a]);
          merged.vals.push_back(row.vals[a]);
          ++a;
        } else {
          std::uint64_t v = f.mul(factor, pr.vals[b]);
          if (a < row.cols.size() && row.cols[a] == pr.cols[b]) v += row.vals[a++];
          v %= p;
          if (v) {
            merged.cols.push_back(pr.cols[b]);
            merged.vals.push_back(static_cast<std::uint32_t>(v));
          }
          ++b;
        }
      }
      std::swap(row, merged);
    }
  }
  return rank;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
    throw InputError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvariantError("inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_mod_p(std::size_t cols, const std::vector<SparseRow>& rows, const PrimeField& field,
                       RankMethod method) {
  if (rows.empty() || cols == 0) return 0;
  const bool gf2 = field.characteristic() == 2;
  if (method == RankMethod::Auto) {
    const bool fits = gf2 ? rows.size() * cols <= kDenseMaxBits : rows.size() * cols <= kDenseMaxWords;
    method = (cols <= kDenseMaxCols && fits) ? RankMethod::Dense : RankMethod::Sparse;
  }
  if (method == RankMethod::Sparse) return rank_sparse(rows, field);
  return gf2 ? rank_dense_gf2(cols, rows) : rank_dense_modp(cols, rows, field);
}

}  // namespace admcm
