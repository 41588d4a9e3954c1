#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace admcm {

/// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  /// InputError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// One matrix row: strictly increasing column indices with nonzero values.
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> vals;
};

enum class RankMethod { Auto, Dense, Sparse };

/// Rank over the field by exact Gaussian elimination. Auto picks dense
/// elimination (bit-packed rows for p = 2) up to 5000 columns and a bounded
/// dense footprint, and sparse pivoting otherwise.
std::size_t rank_mod_p(std::size_t cols, const std::vector<SparseRow>& rows, const PrimeField& field,
                       RankMethod method = RankMethod::Auto);

}  // namespace admcm
