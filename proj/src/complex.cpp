#include "admcm/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "admcm/errors.hpp"

namespace admcm {

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n) {
  if (n < 0 || n > VertexSet::kMaxVertices) throw InputError("ground set size out of range");
  for (VertexSet f : facets)
    if (!f.subset_of(VertexSet::range(n))) throw InputError("facet leaves the ground set");
  facets_ = maximal_elements(std::move(facets));
  for (VertexSet f : facets_) dim_ = std::max(dim_, f.size() - 1);
}

bool SimplicialComplex::is_pure() const noexcept {
  return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return f.size() - 1 == dim_; });
}

bool SimplicialComplex::is_face(VertexSet f) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet g) { return f.subset_of(g); });
}

VertexSet SimplicialComplex::vertices() const noexcept {
  VertexSet all;
  for (VertexSet f : facets_) all |= f;
  return all;
}

namespace {

// Collects faces of all facets into a hash set, stopping past `budget`.
bool collect_faces(const std::vector<VertexSet>& facets, std::size_t budget, std::unordered_set<std::uint64_t>& out) {
  for (VertexSet f : facets) {
    if (f.size() >= 63) return false;
    bool over = false;
    for_each_subset(f, [&](VertexSet s) {
      if (over) return;
      out.insert(s.bits());
      if (out.size() > budget) over = true;
    });
    if (over) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexSet> SimplicialComplex::faces(std::size_t budget) const {
  std::unordered_set<std::uint64_t> seen;
  if (!collect_faces(facets_, budget, seen)) throw ResourceError("faces", budget);
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (auto b : seen) out.emplace_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SimplicialComplex::count_faces(std::size_t budget) const {
  std::unordered_set<std::uint64_t> seen;
  if (!collect_faces(facets_, budget, seen)) return budget + 1;
  return seen.size();
}

SimplicialComplex SimplicialComplex::induced(VertexSet sigma) const {
  if (is_void()) return *this;
  std::vector<VertexSet> parts;
  parts.reserve(facets_.size());
  for (VertexSet f : facets_) parts.push_back(f & sigma);
  return SimplicialComplex(n_, std::move(parts));
}

SimplicialComplex independence_complex(const Clutter& clutter, const CoverBudget& budget) {
  const int n = clutter.vertex_count();
  const VertexSet all = VertexSet::range(n);
  std::vector<VertexSet> facets;
  if (clutter.edges().empty()) {
    facets.push_back(all);
  } else {
    for (VertexSet c : minimal_vertex_covers(clutter, budget)) facets.push_back(all - c);
  }
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face) {
  std::vector<VertexSet> parts;
  for (VertexSet f : complex.facets())
    if (face.subset_of(f)) parts.push_back(f - face);
  if (parts.empty()) throw InputError("link of a set that is not a face");
  return SimplicialComplex(complex.ambient_size(), std::move(parts));
}

bool is_connected(const SimplicialComplex& complex) {
  const VertexSet verts = complex.vertices();
  if (verts.empty()) return true;
  // Merge facets that share a vertex; connected iff one group remains.
  VertexSet reached = VertexSet::single(verts.lowest());
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet f : complex.facets())
      if (f.intersects(reached) && !f.subset_of(reached)) {
        reached |= f;
        grew = true;
      }
  }
  return reached == verts;
}

long long HomologyProfile::euler() const noexcept {
  long long sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int k = static_cast<int>(i) - 1;
    sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[i]);
  }
  return sum;
}

bool HomologyProfile::acyclic() const noexcept {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

long long reduced_euler_characteristic(const std::vector<VertexSet>& faces) {
  long long sum = 0;
  for (VertexSet f : faces) sum += (f.size() % 2 == 1) ? 1 : -1;  // dimension |f|-1
  return sum;
}

HomologyProfile homology_of_faces(const std::vector<VertexSet>& faces, const PrimeField& field) {
  HomologyProfile out;
  if (faces.empty()) return out;
  int top = 0;
  for (VertexSet f : faces) top = std::max(top, f.size());
  // by_size[s]: faces of size s, sorted by mask for index lookup
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(top) + 2);
  for (VertexSet f : faces) by_size[static_cast<std::size_t>(f.size())].push_back(f.bits());
  for (auto& v : by_size) std::sort(v.begin(), v.end());

  const std::uint32_t minus_one = field.neg(1);
  // rank[s] = rank of the boundary map from size-s faces to size-(s-1) faces
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 1; s <= top; ++s) {
    const auto& lower = by_size[static_cast<std::size_t>(s - 1)];
    const auto& upper = by_size[static_cast<std::size_t>(s)];
    if (lower.empty() || upper.empty()) continue;
    std::vector<SparseRow> rows;
    rows.reserve(upper.size());
    for (std::uint64_t bits : upper) {
      SparseRow row;
      int sign = 0;
      for (int v : VertexSet(bits)) {
        const std::uint64_t b = bits & ~(std::uint64_t{1} << v);
        auto it = std::lower_bound(lower.begin(), lower.end(), b);
        if (it == lower.end() || *it != b) throw InputError("face list is not closed under subsets");
        row.cols.push_back(static_cast<std::uint32_t>(it - lower.begin()));
        row.vals.push_back(sign % 2 == 0 ? 1u : minus_one);
        ++sign;
      }
      // mask order of the lower faces need not follow vertex order
      std::vector<std::size_t> idx(row.cols.size());
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return row.cols[a] < row.cols[b]; });
      SparseRow sorted;
      for (std::size_t k : idx) {
        sorted.cols.push_back(row.cols[k]);
        sorted.vals.push_back(row.vals[k]);
      }
      rows.push_back(std::move(sorted));
    }
    rank[static_cast<std::size_t>(s)] = rank_mod_p(lower.size(), rows, field);
  }
  out.dims.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int s = 0; s <= top; ++s) {
    const std::size_t f = by_size[static_cast<std::size_t>(s)].size();
    out.dims[static_cast<std::size_t>(s)] = f - rank[static_cast<std::size_t>(s)] - rank[static_cast<std::size_t>(s) + 1];
  }
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, const PrimeField& field, std::size_t face_budget) {
  if (complex.is_void()) return {};
  return homology_of_faces(complex.faces(face_budget), field);
}

}  // namespace admcm
