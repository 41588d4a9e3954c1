#include "admcm/vertex_set.hpp"

#include <algorithm>

namespace admcm {

VertexSet::VertexSet(std::initializer_list<int> indices) {
  for (int v : indices) insert(v);
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

namespace {

void sort_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  sort_unique(sets);
  std::vector<VertexSet> out;
  // Canonical order lists smaller sets first, so a set is minimal iff no kept
  // set is contained in it.
  for (VertexSet s : sets) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](VertexSet m) { return m.subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  sort_unique(sets);
  std::vector<VertexSet> out;
  for (auto it = sets.rbegin(); it != sets.rend(); ++it) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](VertexSet m) { return it->subset_of(m); });
    if (!dominated) out.push_back(*it);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_antichain(const std::vector<VertexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].subset_of(sets[j])) return false;
  return true;
}

}  // namespace admcm
