#include "admcm/ideal.hpp"

#include <algorithm>

#include "admcm/errors.hpp"

namespace admcm {

SquareFreeIdeal::SquareFreeIdeal(int n, std::vector<VertexSet> generators) : n_(n) {
  if (n < 0 || n > VertexSet::kMaxVertices) throw InputError("ambient size out of range");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  const VertexSet all = VertexSet::range(n);
  for (VertexSet s : generators)
    if (!s.subset_of(all)) throw InputError("generator uses a variable outside the ambient ring");
  if (!is_antichain(generators)) throw InputError("generators are not a minimal generating set (not an antichain)");
  generators_ = std::move(generators);
}

SquareFreeIdeal SquareFreeIdeal::edge_ideal(const Clutter& clutter) {
  return SquareFreeIdeal(clutter.vertex_count(), clutter.edges());
}

SquareFreeIdeal SquareFreeIdeal::alexander_dual(const Clutter& clutter, const CoverBudget& budget) {
  return SquareFreeIdeal(clutter.vertex_count(), minimal_vertex_covers(clutter, budget));
}

std::optional<int> SquareFreeIdeal::degree() const {
  if (generators_.empty()) return std::nullopt;
  const int q = generators_.front().size();
  if (generators_.back().size() != q) return std::nullopt;
  return q;
}

std::optional<std::size_t> SquareFreeIdeal::find(VertexSet generator) const {
  auto it = std::lower_bound(generators_.begin(), generators_.end(), generator);
  if (it == generators_.end() || *it != generator) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

}  // namespace admcm
