#pragma once

#include <optional>
#include <vector>

#include "admcm/clutter.hpp"
#include "admcm/vertex_set.hpp"

namespace admcm {

/// A square-free monomial ideal, given by the supports of its minimal
/// generators over an ambient set of n variables.
class SquareFreeIdeal {
 public:
  SquareFreeIdeal() = default;
  /// InputError if the generators are not an antichain or leave the ambient
  /// range. Generators are sorted canonically.
  SquareFreeIdeal(int n, std::vector<VertexSet> generators);

  static SquareFreeIdeal edge_ideal(const Clutter& clutter);
  /// Generated by the minimal vertex covers of the clutter.
  static SquareFreeIdeal alexander_dual(const Clutter& clutter, const CoverBudget& budget = {});

  int ambient_size() const noexcept { return n_; }
  const std::vector<VertexSet>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  /// Common generator degree, std::nullopt for mixed degrees or no generators.
  std::optional<int> degree() const;
  /// Position of a generator in generators(), if present.
  std::optional<std::size_t> find(VertexSet generator) const;

 private:
  int n_ = 0;
  std::vector<VertexSet> generators_;
};

}  // namespace admcm
