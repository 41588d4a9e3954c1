#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "admcm/clutter.hpp"
#include "admcm/complex.hpp"
#include "admcm/ideal.hpp"
#include "admcm/linalg.hpp"

namespace admcm {

enum class CMStatus { CM, NotCM, Inconclusive };

const char* to_string(CMStatus s) noexcept;

struct CMVerdict {
  CMStatus status = CMStatus::Inconclusive;
  /// For NotCM: a face F with H~_i(lk F) != 0 for i = homology_index < dim lk F.
  VertexSet witness_face;
  int homology_index = 0;
  std::uint32_t characteristic = 2;
  bool exhaustive = false;
  std::size_t faces_checked = 0;
  std::string note;
};

struct CMOptions {
  /// Faces of the whole complex; above this only the witness search runs.
  std::size_t face_budget = std::size_t{1} << 20;
  /// Faces of a single link for a full homology computation in witness search.
  std::size_t link_face_budget = std::size_t{1} << 16;
  /// Skip the exhaustive pass; the answer is then NotCM or Inconclusive.
  bool witness_only = false;
  unsigned threads = 1;
  CoverBudget covers{};
};

/// Reisner's criterion. The exhaustive pass visits faces in canonical order and
/// reports the first witness in that order, whatever the thread count.
/// The witness search visits faces by increasing codimension inside facets,
/// checking link connectivity before higher homology.
CMVerdict reisner_check(const SimplicialComplex& complex, const PrimeField& field, const CMOptions& options = {});

/// reisner_check on the independence complex.
CMVerdict is_cohen_macaulay(const Clutter& clutter, const PrimeField& field, const CMOptions& options = {});

/// Recomputes the link homology: true iff `face` is a face, index < dim lk face
/// and H~_index(lk face) != 0.
bool reverify_witness(const SimplicialComplex& complex, VertexSet face, int index, const PrimeField& field);

struct BettiTable {
  /// (i, sigma) -> beta_{i,sigma}; zero entries omitted.
  std::map<std::pair<int, VertexSet>, std::size_t> fine;
  /// (i, j) -> beta_{i,j}
  std::map<std::pair<int, int>, std::size_t> coarse;
};

/// Stanley-Reisner complex of a square-free ideal: sets containing no generator.
std::vector<VertexSet> restricted_faces(const SquareFreeIdeal& ideal, VertexSet sigma);

/// Multigraded Betti numbers by Hochster's formula. Without a restriction every
/// sigma is scanned; ResourceError once the subset work passes `budget`.
BettiTable betti_numbers(const SquareFreeIdeal& ideal, const PrimeField& field,
                         const std::optional<std::vector<VertexSet>>& restriction = std::nullopt,
                         std::size_t budget = std::size_t{1} << 26);

enum class LinearStatus { Linear, NotLinear, Inconclusive };

const char* to_string(LinearStatus s) noexcept;

struct LinearVerdict {
  LinearStatus status = LinearStatus::Inconclusive;
  /// For NotLinear: beta_{index, witness} != 0 with |witness| != index + degree.
  VertexSet witness;
  int index = 0;
  int degree = 0;
  std::size_t dimension = 0;
  std::uint32_t characteristic = 2;
  std::string note;
};

/// Scans sigma by increasing size; InputError for mixed generator degrees.
LinearVerdict has_linear_resolution(const SquareFreeIdeal& ideal, const PrimeField& field,
                                    std::size_t budget = std::size_t{1} << 26);

}  // namespace admcm
