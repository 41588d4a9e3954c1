#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "admcm/clutter.hpp"
#include "admcm/vertex_set.hpp"

namespace admcm {

/// Color classes X^1..X^d and matching blocks e_1..e_g over one vertex set.
///
/// Colors and blocks are numbered from 1, so vertex(i, j) is x^i_j: the
/// unique member of e_j in color class X^i, when there is one.
class GridStructure {
 public:
  GridStructure() = default;
  /// No validation here; see validate_grid.
  GridStructure(std::vector<VertexSet> colors, std::vector<VertexSet> matching);

  int d() const noexcept { return static_cast<int>(colors_.size()); }
  int g() const noexcept { return static_cast<int>(matching_.size()); }
  const std::vector<VertexSet>& colors() const noexcept { return colors_; }
  const std::vector<VertexSet>& matching() const noexcept { return matching_; }
  VertexSet color_class(int i) const { return colors_.at(static_cast<std::size_t>(i - 1)); }
  VertexSet block(int j) const { return matching_.at(static_cast<std::size_t>(j - 1)); }

  /// Color of v (1..d), or 0 if v is in no color class.
  int color_of(int v) const noexcept { return color_of_[static_cast<std::size_t>(v)]; }
  /// Block of v (1..g), or 0 if v is in no block.
  int block_of(int v) const noexcept { return block_of_[static_cast<std::size_t>(v)]; }

  /// x^i_j, if e_j meets X^i in exactly one vertex.
  std::optional<int> vertex(int color, int block) const;
  /// True iff every block meets every color class exactly once.
  bool is_total() const;

  bool operator==(const GridStructure& o) const { return colors_ == o.colors_ && matching_ == o.matching_; }

 private:
  std::vector<VertexSet> colors_;
  std::vector<VertexSet> matching_;
  std::array<int, VertexSet::kMaxVertices> color_of_{};
  std::array<int, VertexSet::kMaxVertices> block_of_{};
};

/// (i_1, ..., i_g): the color of a size-g cover's vertex in each block e_j.
/// Entries are 1-based colors; position j-1 holds block j.
using ExponentVector = std::vector<int>;

/// A clutter together with a grid under which it is admissible.
struct AdmissibleInstance {
  Clutter clutter;
  GridStructure grid;
};

/// Every violated grid invariant, as human-readable lines. Empty means valid.
std::vector<std::string> validate_grid(const Clutter& clutter, const GridStructure& grid);

struct SetCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// The set meets colors exactly 1..|s|, once each, and the block numbers read
/// along the colors never decrease.
SetCheck is_admissible_set(const GridStructure& grid, VertexSet s);

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<VertexSet> offending_edges;
  std::vector<int> missing_blocks;  ///< 1-based blocks that are not edges
};

/// InputError if the grid fails validate_grid.
AdmissibilityReport is_admissible_instance(const Clutter& clutter, const GridStructure& grid);

/// Checks admissibility and returns the pair; InputError otherwise.
AdmissibleInstance make_instance(Clutter clutter, GridStructure grid);

/// Searches König matchings, block orders and colorings for a grid making the
/// clutter admissible. std::nullopt means none exists; a ResourceError means
/// the search budget ran out first.
std::optional<GridStructure> find_grid_structure(const Clutter& clutter, std::size_t max_nodes = 10'000'000);

/// ShapeError naming the first block j with |cover ∩ e_j| != 1, or whose
/// vertex has no color.
ExponentVector exponent_vector(const GridStructure& grid, VertexSet cover);
/// Inverse of exponent_vector. InputError on wrong length or a missing x^i_j.
VertexSet vertex_set(const GridStructure& grid, const ExponentVector& exponents);

/// Replaces x^t_i by x^{t+1}_i in a size-g minimal cover whose later blocks all
/// carry one common exponent l > t (for i = g: just t < d). Slot i is 1-based.
VertexSet raise_the_end(const AdmissibleInstance& instance, VertexSet cover, int i);

/// Replaces x^t_i by x^{t-1}_i in a size-g minimal cover whose earlier blocks
/// all carry one common exponent l < t (for i = 1: just t > 1).
VertexSet lower_the_front(const AdmissibleInstance& instance, VertexSet cover, int i);

/// Given covers base ∪ {x^c_i} and base ∪ {x^c2_i}, returns base ∪ {x^l_i} for
/// every l between c and c2, each checked to be a cover. c and c2 may come in
/// either order.
std::vector<VertexSet> consecutive_interpolation(const AdmissibleInstance& instance, VertexSet base, int i, int c,
                                                 int c2);

}  // namespace admcm
