#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "admcm/grid.hpp"

namespace admcm {

/// Label of x^i_j in generated instances: "c{i}_b{j}" (color i, block j).
std::string grid_label(int color, int block);

/// The full d x g grid with the "c{i}_b{j}" labels, vertex index (i-1)*g + (j-1).
GridStructure full_grid(int d, int g);

/// The uniform admissible unmixed clutter of height g >= 4 on 5g vertices that
/// is not Cohen-Macaulay: the matching e_j = x_j y_j z_j w_j u_j plus four
/// fixed edges living on the first four blocks. InputError for g < 4.
AdmissibleInstance gen_counterexample(int g);

/// The matching e_1..e_g of the full d x g grid plus `extra` distinct random
/// non-constant nondecreasing block sequences (j_1 <= ... <= j_d), each read as
/// the edge x^1_{j_1} ... x^d_{j_d}. Deterministic in `seed`. Not necessarily
/// unmixed.
AdmissibleInstance gen_random_admissible(int d, int g, int extra, std::uint64_t seed);

/// Number of nondecreasing sequences of length d over {1..g}.
std::uint64_t count_admissible_sequences(int d, int g);

/// Retries gen_random_admissible on derived seeds until the result is unmixed.
/// ResourceError after `retries` attempts.
AdmissibleInstance sample_unmixed(int d, int g, int extra, std::uint64_t seed, int retries = 1000);

/// The height-3 instance {x1y1z1, x2y2z2, x3y3z3, x1y2z3} with labels x1..z3
/// and colors x, y, z.
AdmissibleInstance fixture_example_g3();

/// A random clutter on n vertices ("v0", "v1", ...): `edge_count` random
/// nonempty subsets, minimalized. Deterministic in `seed`.
Clutter gen_random_clutter(int n, int edge_count, int min_edge_size, int max_edge_size, std::uint64_t seed);

/// Same clutter with the vertex list permuted at random; labels travel with
/// their vertices. perm[old index] = new index when `perm` is given.
Clutter shuffle_vertices(const Clutter& clutter, std::uint64_t seed, std::vector<int>* perm = nullptr);

/// Vertices of `a` then of `b`, labels prefixed "a." and "b.".
Clutter disjoint_union(const Clutter& a, const Clutter& b);

/// One graph per isomorphism class on n <= 7 vertices ("v0", ...), as
/// 2-uniform clutters, edgeless graph included.
std::vector<Clutter> graphs_up_to_isomorphism(int n);

/// Random graph on n vertices, each pair an edge with probability 1/2.
Clutter gen_random_graph(int n, std::uint64_t seed);

}  // namespace admcm
