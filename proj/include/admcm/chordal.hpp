#pragma once

#include <optional>
#include <string>
#include <vector>

#include "admcm/clutter.hpp"
#include "admcm/cm.hpp"
#include "admcm/grid.hpp"
#include "admcm/linalg.hpp"

namespace admcm {

struct ChordalResult {
  bool chordal = false;
  /// Perfect elimination order (vertex indices) when chordal.
  std::vector<int> elimination_order;
};

/// Simplicial-vertex peeling. The order returned is re-verified before it is
/// handed out. InputError unless every edge has two vertices.
ChordalResult is_chordal(const Clutter& graph);

/// True iff the order is a perfect elimination order of the graph.
bool verify_elimination_order(const Clutter& graph, const std::vector<int>& order);

/// Complement on the same vertex list, isolated vertices included.
Clutter complement_graph(const Clutter& graph);

/// Chordality of the complement; by Froberg, whether the edge ideal has a
/// linear resolution.
bool froberg_check(const Clutter& graph);

struct RecoveryResult {
  std::optional<GridStructure> grid;
  /// Why recovery stopped, step by step, when grid is empty.
  std::vector<std::string> log;
};

/// Rebuilds colors X^1..X^d and a perfect matching e_1, e_2 for a d-uniform
/// Cohen-Macaulay clutter of height two by peeling free-vertex pairs off a
/// simplicial vertex of the co-dual graph. InputError if the clutter is not
/// uniform or not of height two. Any result is checked with
/// is_admissible_instance before it is returned.
RecoveryResult recover_structure_g2(const Clutter& clutter, const PrimeField& field, const CMOptions& options = {});

}  // namespace admcm
