#pragma once

#include <cstddef>
#include <vector>

#include "admcm/clutter.hpp"
#include "admcm/linalg.hpp"
#include "admcm/vertex_set.hpp"

namespace admcm {

/// A simplicial complex on {0..n-1}, stored by its facets.
///
/// No facets means the void complex; the single facet {} is the complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the inclusion-maximal sets. InputError if a set leaves the ground range.
  SimplicialComplex(int n, std::vector<VertexSet> facets);

  int ambient_size() const noexcept { return n_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  /// Largest facet size minus one; -1 for {∅}, -2 for the void complex.
  int dimension() const noexcept { return dim_; }
  bool is_pure() const noexcept;
  bool is_face(VertexSet f) const noexcept;
  /// Union of the facets.
  VertexSet vertices() const noexcept;

  /// Every face, sorted canonically. ResourceError when there are more than `budget`.
  std::vector<VertexSet> faces(std::size_t budget = std::size_t{1} << 20) const;
  /// Number of faces, or budget + 1 if it exceeds the budget.
  std::size_t count_faces(std::size_t budget) const;

  /// Faces contained in sigma.
  SimplicialComplex induced(VertexSet sigma) const;

 private:
  int n_ = 0;
  int dim_ = -2;
  std::vector<VertexSet> facets_;
};

/// Sets containing no edge; facets are the complements of minimal vertex covers.
SimplicialComplex independence_complex(const Clutter& clutter, const CoverBudget& budget = {});

/// InputError if `face` is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);

/// True iff the graph on the complex's vertices with edges from its faces is
/// connected. Vertex-free complexes count as connected.
bool is_connected(const SimplicialComplex& complex);

struct HomologyProfile {
  /// dims[k + 1] = dim H~_k for k = -1 .. dimension.
  std::vector<std::size_t> dims;

  std::size_t at(int k) const noexcept {
    return k + 1 >= 0 && static_cast<std::size_t>(k + 1) < dims.size() ? dims[static_cast<std::size_t>(k + 1)] : 0;
  }
  /// sum_k (-1)^k dim H~_k
  long long euler() const noexcept;
  bool acyclic() const noexcept;
  bool operator==(const HomologyProfile&) const = default;
};

/// -f_{-1} + f_0 - f_1 + ... straight from face counts.
long long reduced_euler_characteristic(const std::vector<VertexSet>& faces);

/// Reduced homology over the field, from ranks of the boundary maps.
/// ResourceError if the complex has more than `face_budget` faces.
HomologyProfile reduced_homology(const SimplicialComplex& complex, const PrimeField& field,
                                 std::size_t face_budget = std::size_t{1} << 20);

/// Same, given a downward-closed face list (any order).
HomologyProfile homology_of_faces(const std::vector<VertexSet>& faces, const PrimeField& field);

}  // namespace admcm
