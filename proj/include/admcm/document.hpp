#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "admcm/clutter.hpp"
#include "admcm/grid.hpp"

namespace admcm {

/// A clutter read from a JSON document
/// {"vertices": [...], "edges": [[...]], "colors": [[...]], "matching": [[...]]}
/// where colors and matching are optional.
struct ClutterDocument {
  Clutter clutter;
  std::optional<GridStructure> grid;
  /// Only one of colors / matching given: kept here so reports can say so.
  std::optional<std::vector<VertexSet>> colors;
  std::optional<std::vector<VertexSet>> matching;
  std::vector<std::string> warnings;
};

/// InputError with "line L, column C" for syntax errors and for every semantic
/// problem (unknown or duplicate labels, antichain violations, bad grids).
/// With `minimalize`, edges containing other edges are dropped with a warning.
ClutterDocument parse_document(std::string_view text, bool minimalize = false);

/// Pretty-printed document; parse_document(serialize_document(...)) gives the
/// same clutter and grid back.
std::string serialize_document(const Clutter& clutter, const GridStructure* grid = nullptr);

/// FNV-1a 64 of the bytes, as 16 hex digits.
std::string content_digest(std::string_view bytes);

}  // namespace admcm
