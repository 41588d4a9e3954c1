#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace admcm {

/// A set of vertex indices of one fixed ground set, stored as a 64-bit mask.
///
/// Ground sets are limited to 64 vertices; every algorithm in the library is
/// exponential in some vertex count long before that limit matters.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  VertexSet(std::initializer_list<int> indices);

  static constexpr VertexSet single(int v) noexcept { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int lowest() const noexcept { return std::countr_zero(bits_); }
  /// One past the largest member (0 for the empty set).
  constexpr int span() const noexcept { return 64 - std::countl_zero(bits_); }

  constexpr VertexSet& insert(int v) noexcept {
    bits_ |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& erase(int v) noexcept {
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
  }
  constexpr VertexSet with(int v) const noexcept { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const noexcept { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  std::vector<int> indices() const;

  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const noexcept { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const noexcept = default;

  /// Canonical order: by size, then lexicographically on the sorted index lists.
  constexpr std::strong_ordering operator<=>(const VertexSet& o) const noexcept {
    if (auto c = size() <=> o.size(); c != 0) return c;
    if (bits_ == o.bits_) return std::strong_ordering::equal;
    // The smallest index in the symmetric difference decides.
    const std::uint64_t diff = bits_ ^ o.bits_;
    return (bits_ & diff & (~diff + 1)) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f(sub) for every subset of `set`, including the empty set and `set`.
template <typename F>
void for_each_subset(VertexSet set, F&& f) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(VertexSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// Keeps the inclusion-minimal members, sorted canonically and deduplicated.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);
/// Keeps the inclusion-maximal members, sorted canonically and deduplicated.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets);
/// True iff no member contains another one (duplicates count as containment).
bool is_antichain(const std::vector<VertexSet>& sets);

}  // namespace admcm
