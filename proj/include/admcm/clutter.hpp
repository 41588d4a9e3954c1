#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "admcm/vertex_set.hpp"

namespace admcm {

/// Minimal vertex covers in canonical order (size, then lexicographic).
using CoverList = std::vector<VertexSet>;

/// A finite vertex set with an antichain of nonempty edges.
///
/// Vertex labels are opaque strings mapped to dense indices 0..n-1 in the
/// order given; edges are stored deduplicated and canonically sorted.
class Clutter {
 public:
  Clutter() = default;

  /// Throws InputError on duplicate labels, empty or out-of-range edges, or an
  /// edge containing another one. Duplicate edges are merged silently.
  Clutter(std::vector<std::string> labels, std::vector<VertexSet> edges);

  /// Same as above, but non-minimal edges are dropped instead of rejected.
  static Clutter minimalized(std::vector<std::string> labels, std::vector<VertexSet> edges);

  /// Builds from label lists; unknown labels are an InputError.
  static Clutter from_labels(std::vector<std::string> labels,
                             const std::vector<std::vector<std::string>>& edges,
                             bool minimalize = false);

  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  VertexSet vertices() const noexcept { return VertexSet::range(vertex_count()); }

  std::optional<int> index_of(const std::string& label) const;
  /// Throws InputError for unknown labels.
  VertexSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;
  /// "{x1,y2,z3}" in index order.
  std::string format(VertexSet s) const;

  bool has_edge(VertexSet e) const;

  bool operator==(const Clutter&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> edges_;
};

struct CoverBudget {
  std::size_t max_covers = 1'000'000;
  std::size_t max_nodes = 1'000'000;
};

/// Throws InputError if `candidate` has indices outside the vertex range.
bool is_vertex_cover(const Clutter& clutter, VertexSet candidate);

/// True iff `candidate` is a cover and no vertex can be dropped from it.
bool is_minimal_vertex_cover(const Clutter& clutter, VertexSet candidate);

/// All minimal transversals of the edge family, canonically sorted.
/// Throws ResourceError when a budget is exceeded.
CoverList minimal_vertex_covers(const Clutter& clutter, const CoverBudget& budget = {});

/// Smallest size of a minimal vertex cover. InputError on an empty edge set.
int height(const Clutter& clutter, const CoverBudget& budget = {});

bool is_unmixed(const Clutter& clutter, const CoverBudget& budget = {});

/// Common edge size when all edges share one, std::nullopt otherwise.
std::optional<int> uniform_size(const Clutter& clutter);
inline bool is_uniform(const Clutter& clutter) { return uniform_size(clutter).has_value(); }

/// The clutter whose edges are the minimal vertex covers of `clutter`.
Clutter alexander_dual(const Clutter& clutter, const CoverBudget& budget = {});

/// Every set of height(clutter) pairwise disjoint edges whose union is the
/// whole vertex set. Each matching is listed in canonical edge order, and the
/// list itself is sorted.
std::vector<std::vector<VertexSet>> perfect_matchings_konig(const Clutter& clutter,
                                                            const CoverBudget& budget = {});

/// Vertices lying in exactly one edge.
VertexSet free_vertices(const Clutter& clutter);

}  // namespace admcm
