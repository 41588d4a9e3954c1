#include "admcm/generators.hpp"

#include <algorithm>

#include "admcm/errors.hpp"
#include "admcm/random.hpp"

namespace admcm {

std::string grid_label(int color, int block) { return "c" + std::to_string(color) + "_b" + std::to_string(block); }

namespace {

int grid_index(int color, int block, int g) { return (color - 1) * g + (block - 1); }

std::vector<std::string> grid_labels(int d, int g) {
  std::vector<std::string> labels;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= g; ++j) labels.push_back(grid_label(i, j));
  return labels;
}

// Edge x^1_{s_1} ... x^d_{s_d} of the full grid.
VertexSet sequence_edge(const std::vector<int>& blocks, int g) {
  VertexSet e;
  for (std::size_t i = 0; i < blocks.size(); ++i) e.insert(grid_index(static_cast<int>(i) + 1, blocks[i], g));
  return e;
}

void check_grid_size(int d, int g) {
  if (d < 1 || g < 1) throw InputError("d and g must be positive");
  if (d * g > VertexSet::kMaxVertices)
    throw InputError("d*g = " + std::to_string(d * g) + " exceeds " + std::to_string(VertexSet::kMaxVertices) +
                     " vertices");
}

}  // namespace

GridStructure full_grid(int d, int g) {
  check_grid_size(d, g);
  std::vector<VertexSet> colors(static_cast<std::size_t>(d)), blocks(static_cast<std::size_t>(g));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= g; ++j) {
      colors[static_cast<std::size_t>(i - 1)].insert(grid_index(i, j, g));
      blocks[static_cast<std::size_t>(j - 1)].insert(grid_index(i, j, g));
    }
  return GridStructure(std::move(colors), std::move(blocks));
}

AdmissibleInstance gen_counterexample(int g) {
  if (g < 4) throw InputError("the counterexample family needs g >= 4, got " + std::to_string(g));
  const int d = 5;
  check_grid_size(d, g);
  GridStructure grid = full_grid(d, g);
  std::vector<VertexSet> edges(grid.matching());
  // x1y2z3w3u4, x1y1z2w2u3, x1y1z3w3u3, x1y2z2w2u4
  for (const std::vector<int>& seq : {std::vector<int>{1, 2, 3, 3, 4}, std::vector<int>{1, 1, 2, 2, 3},
                                      std::vector<int>{1, 1, 3, 3, 3}, std::vector<int>{1, 2, 2, 2, 4}})
    edges.push_back(sequence_edge(seq, g));
  return make_instance(Clutter(grid_labels(d, g), std::move(edges)), std::move(grid));
}

std::uint64_t count_admissible_sequences(int d, int g) {
  // C(g + d - 1, d)
  std::uint64_t r = 1;
  for (int k = 1; k <= d; ++k) r = r * static_cast<std::uint64_t>(g - 1 + k) / static_cast<std::uint64_t>(k);
  return r;
}

AdmissibleInstance gen_random_admissible(int d, int g, int extra, std::uint64_t seed) {
  check_grid_size(d, g);
  if (extra < 0) throw InputError("extra edge count must be nonnegative");
  std::vector<std::vector<int>> pool;
  std::vector<int> seq(static_cast<std::size_t>(d), 1);
  while (true) {
    if (seq.front() != seq.back()) pool.push_back(seq);
    int k = d - 1;
    while (k >= 0 && seq[static_cast<std::size_t>(k)] == g) --k;
    if (k < 0) break;
    const int next = seq[static_cast<std::size_t>(k)] + 1;
    for (int m = k; m < d; ++m) seq[static_cast<std::size_t>(m)] = next;
  }
  if (static_cast<std::size_t>(extra) > pool.size())
    throw InputError("requested " + std::to_string(extra) + " extra edges but only " + std::to_string(pool.size()) +
                     " non-constant admissible sequences exist");
  std::mt19937_64 rng(seed);
  portable_shuffle(pool, rng);
  GridStructure grid = full_grid(d, g);
  std::vector<VertexSet> edges(grid.matching());
  for (int k = 0; k < extra; ++k) edges.push_back(sequence_edge(pool[static_cast<std::size_t>(k)], g));
  return make_instance(Clutter(grid_labels(d, g), std::move(edges)), std::move(grid));
}

AdmissibleInstance sample_unmixed(int d, int g, int extra, std::uint64_t seed, int retries) {
  std::mt19937_64 seeds(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    auto inst = gen_random_admissible(d, g, extra, attempt == 0 ? seed : seeds());
    if (is_unmixed(inst.clutter)) return inst;
  }
  throw ResourceError("unmixed_retries", static_cast<std::size_t>(retries));
}

AdmissibleInstance fixture_example_g3() {
  std::vector<std::string> labels{"x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"};
  GridStructure grid({VertexSet{0, 1, 2}, VertexSet{3, 4, 5}, VertexSet{6, 7, 8}},
                     {VertexSet{0, 3, 6}, VertexSet{1, 4, 7}, VertexSet{2, 5, 8}});
  std::vector<VertexSet> edges{VertexSet{0, 3, 6}, VertexSet{1, 4, 7}, VertexSet{2, 5, 8}, VertexSet{0, 4, 8}};
  return make_instance(Clutter(std::move(labels), std::move(edges)), std::move(grid));
}

Clutter gen_random_clutter(int n, int edge_count, int min_edge_size, int max_edge_size, std::uint64_t seed) {
  if (n < 1 || n > VertexSet::kMaxVertices) throw InputError("vertex count out of range");
  if (min_edge_size < 1 || max_edge_size > n || min_edge_size > max_edge_size)
    throw InputError("edge size range out of bounds");
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<VertexSet> edges;
  for (int k = 0; k < edge_count; ++k) {
    const int size = min_edge_size + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_edge_size - min_edge_size + 1)));
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
    portable_shuffle(verts, rng);
    VertexSet e;
    for (int m = 0; m < size; ++m) e.insert(verts[static_cast<std::size_t>(m)]);
    edges.push_back(e);
  }
  return Clutter::minimalized(std::move(labels), std::move(edges));
}

Clutter shuffle_vertices(const Clutter& clutter, std::uint64_t seed, std::vector<int>* perm) {
  const int n = clutter.vertex_count();
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = v;
  std::mt19937_64 rng(seed);
  portable_shuffle(p, rng);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] = clutter.labels()[static_cast<std::size_t>(v)];
  std::vector<VertexSet> edges;
  for (VertexSet e : clutter.edges()) {
    VertexSet m;
    for (int v : e) m.insert(p[static_cast<std::size_t>(v)]);
    edges.push_back(m);
  }
  if (perm) *perm = p;
  return Clutter(std::move(labels), std::move(edges));
}

Clutter disjoint_union(const Clutter& a, const Clutter& b) {
  const int na = a.vertex_count();
  if (na + b.vertex_count() > VertexSet::kMaxVertices) throw InputError("union exceeds 64 vertices");
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("a." + l);
  for (const auto& l : b.labels()) labels.push_back("b." + l);
  std::vector<VertexSet> edges(a.edges());
  for (VertexSet e : b.edges()) edges.emplace_back(e.bits() << na);
  return Clutter(std::move(labels), std::move(edges));
}

namespace {

// Edge masks over the n(n-1)/2 vertex pairs, pair (a,b) with a < b.
int pair_bit(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::uint32_t canonical_graph(std::uint32_t mask, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = v;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mask >> pair_bit(a, b, n) & 1u) edges.emplace_back(a, b);
  std::uint32_t best = mask;
  do {
    std::uint32_t m = 0;
    for (auto [a, b] : edges) m |= std::uint32_t{1} << pair_bit(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)], n);
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

Clutter graph_from_mask(std::uint32_t mask, int n) {
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<VertexSet> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mask >> pair_bit(a, b, n) & 1u) edges.push_back(VertexSet{a, b});
  return Clutter(std::move(labels), std::move(edges));
}

}  // namespace

std::vector<Clutter> graphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 7) throw InputError("isomorphism classes are only enumerated up to 7 vertices");
  // Every graph on k+1 vertices is a graph on k vertices plus one vertex, so
  // extending each class representative in all ways reaches every class.
  std::vector<std::uint32_t> level{0};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t m : level) {
      std::uint32_t base = 0;
      for (int a = 0; a < k - 1; ++a)
        for (int b = a + 1; b < k - 1; ++b)
          if (m >> pair_bit(a, b, k - 1) & 1u) base |= std::uint32_t{1} << pair_bit(a, b, k);
      for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (k - 1)); ++nb) {
        std::uint32_t g = base;
        for (int a = 0; a < k - 1; ++a)
          if (nb >> a & 1u) g |= std::uint32_t{1} << pair_bit(a, k - 1, k);
        next.push_back(canonical_graph(g, k));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  std::vector<Clutter> out;
  for (std::uint32_t m : level) out.push_back(graph_from_mask(m, n));
  return out;
}

Clutter gen_random_graph(int n, std::uint64_t seed) {
  if (n < 1 || n > VertexSet::kMaxVertices) throw InputError("vertex count out of range");
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<VertexSet> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (draw_below(rng, 2)) edges.push_back(VertexSet{a, b});
  return Clutter(std::move(labels), std::move(edges));
}

}  // namespace admcm
