#include "admcm/grid.hpp"

#include <algorithm>
#include <numeric>

#include "admcm/errors.hpp"

namespace admcm {

GridStructure::GridStructure(std::vector<VertexSet> colors, std::vector<VertexSet> matching)
    : colors_(std::move(colors)), matching_(std::move(matching)) {
  for (int i = static_cast<int>(colors_.size()); i >= 1; --i)
    for (int v : colors_[static_cast<std::size_t>(i - 1)]) color_of_[static_cast<std::size_t>(v)] = i;
  for (int j = static_cast<int>(matching_.size()); j >= 1; --j)
    for (int v : matching_[static_cast<std::size_t>(j - 1)]) block_of_[static_cast<std::size_t>(v)] = j;
}

std::optional<int> GridStructure::vertex(int color, int block) const {
  if (color < 1 || color > d() || block < 1 || block > g()) return std::nullopt;
  const VertexSet s = color_class(color) & this->block(block);
  if (s.size() != 1) return std::nullopt;
  return s.lowest();
}

bool GridStructure::is_total() const {
  for (VertexSet b : matching_)
    for (VertexSet c : colors_)
      if ((b & c).size() != 1) return false;
  return true;
}

namespace {

void check_partition(const std::vector<VertexSet>& parts, VertexSet all, const std::string& what,
                     std::vector<std::string>& out) {
  VertexSet seen;
  bool overlap = false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) out.push_back(what + " part " + std::to_string(i + 1) + " is empty");
    if (!parts[i].subset_of(all)) out.push_back(what + " part " + std::to_string(i + 1) + " uses unknown vertices");
    if (parts[i].intersects(seen)) overlap = true;
    seen |= parts[i];
  }
  if (overlap) out.push_back(what + " is not a partition: parts overlap");
  if (seen != all && (all - seen).size() > 0) out.push_back(what + " is not a partition: vertices left uncovered");
}

}  // namespace

std::vector<std::string> validate_grid(const Clutter& clutter, const GridStructure& grid) {
  std::vector<std::string> out;
  const VertexSet all = clutter.vertices();
  if (grid.d() == 0) out.push_back("no color classes");
  if (grid.g() == 0) out.push_back("no matching blocks");
  check_partition(grid.colors(), all, "color classes", out);
  check_partition(grid.matching(), all, "matching", out);
  for (int j = 1; j <= grid.g(); ++j)
    for (int i = 1; i <= grid.d(); ++i)
      if ((grid.block(j) & grid.color_class(i)).size() > 1)
        out.push_back("block e_" + std::to_string(j) + " meets color class X^" + std::to_string(i) +
                      " more than once");
  return out;
}

SetCheck is_admissible_set(const GridStructure& grid, VertexSet s) {
  const int k = s.size();
  // by_color[i] = block of the member with color i+1, 0 while unseen.
  std::vector<int> by_color(static_cast<std::size_t>(std::max(k, 0)), 0);
  for (int v : s) {
    const int c = grid.color_of(v);
    const int b = grid.block_of(v);
    if (c == 0 || b == 0) return {false, "vertex " + std::to_string(v) + " has no color or block"};
    if (c > k) return {false, "color " + std::to_string(c) + " exceeds set size " + std::to_string(k)};
    if (by_color[static_cast<std::size_t>(c - 1)] != 0)
      return {false, "color " + std::to_string(c) + " met twice"};
    by_color[static_cast<std::size_t>(c - 1)] = b;
  }
  for (int i = 1; i < k; ++i)
    if (by_color[static_cast<std::size_t>(i - 1)] > by_color[static_cast<std::size_t>(i)])
      return {false, "block numbers decrease from color " + std::to_string(i) + " to " + std::to_string(i + 1)};
  return {true, {}};
}

AdmissibilityReport is_admissible_instance(const Clutter& clutter, const GridStructure& grid) {
  if (auto v = validate_grid(clutter, grid); !v.empty()) throw InputError("invalid grid: " + v.front());
  AdmissibilityReport r;
  for (int j = 1; j <= grid.g(); ++j)
    if (!clutter.has_edge(grid.block(j))) r.missing_blocks.push_back(j);
  for (VertexSet e : clutter.edges())
    if (!is_admissible_set(grid, e)) r.offending_edges.push_back(e);
  r.admissible = r.missing_blocks.empty() && r.offending_edges.empty();
  return r;
}

AdmissibleInstance make_instance(Clutter clutter, GridStructure grid) {
  const auto r = is_admissible_instance(clutter, grid);
  if (!r.admissible) {
    if (!r.missing_blocks.empty())
      throw InputError("matching block e_" + std::to_string(r.missing_blocks.front()) + " is not an edge");
    throw InputError("edge " + clutter.format(r.offending_edges.front()) + " is not admissible");
  }
  return {std::move(clutter), std::move(grid)};
}

namespace {

// Given the block order, an admissible edge of size k reads colors 1..k in
// block order, so a member's color is pinned between the number of members in
// strictly earlier blocks (+1) and the number in earlier-or-equal blocks. Only
// members sharing a block remain to be separated, which the all-different
// constraint per edge handles.
class Colorer {
 public:
  Colorer(const Clutter& c, const std::vector<VertexSet>& blocks, std::size_t& nodes, std::size_t max_nodes)
      : clutter_(c), blocks_(blocks), nodes_(nodes), max_nodes_(max_nodes) {}

  std::optional<GridStructure> run() {
    const int n = clutter_.vertex_count();
    pos_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < blocks_.size(); ++j)
      for (int v : blocks_[j]) pos_[static_cast<std::size_t>(v)] = static_cast<int>(j) + 1;
    lo_.assign(static_cast<std::size_t>(n), 1);
    hi_.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) hi_[static_cast<std::size_t>(v)] = blocks_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)] - 1)].size();
    for (VertexSet e : clutter_.edges()) {
      for (int v : e) {
        int less = 0, leq = 0;
        for (int w : e) {
          less += pos_[static_cast<std::size_t>(w)] < pos_[static_cast<std::size_t>(v)];
          leq += pos_[static_cast<std::size_t>(w)] <= pos_[static_cast<std::size_t>(v)];
        }
        lo_[static_cast<std::size_t>(v)] = std::max(lo_[static_cast<std::size_t>(v)], less + 1);
        hi_[static_cast<std::size_t>(v)] = std::min(hi_[static_cast<std::size_t>(v)], leq);
      }
    }
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    for (int v = 0; v < n; ++v)
      if (lo_[static_cast<std::size_t>(v)] > hi_[static_cast<std::size_t>(v)]) return std::nullopt;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return hi_[static_cast<std::size_t>(a)] - lo_[static_cast<std::size_t>(a)] <
             hi_[static_cast<std::size_t>(b)] - lo_[static_cast<std::size_t>(b)];
    });
    color_.assign(static_cast<std::size_t>(n), 0);
    if (!assign(0)) return std::nullopt;
    int d = 0;
    for (int c : color_) d = std::max(d, c);
    std::vector<VertexSet> colors(static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(color_[static_cast<std::size_t>(v)] - 1)].insert(v);
    return GridStructure(std::move(colors), blocks_);
  }

 private:
  bool consistent(int v) const {
    const int c = color_[static_cast<std::size_t>(v)];
    for (VertexSet e : clutter_.edges()) {
      if (!e.contains(v)) continue;
      for (int w : e)
        if (w != v && color_[static_cast<std::size_t>(w)] == c) return false;
    }
    return true;
  }

  bool assign(std::size_t k) {
    if (++nodes_ > max_nodes_) throw ResourceError("grid_search_nodes", max_nodes_);
    if (k == order_.size()) return true;
    const int v = order_[k];
    for (int c = lo_[static_cast<std::size_t>(v)]; c <= hi_[static_cast<std::size_t>(v)]; ++c) {
      color_[static_cast<std::size_t>(v)] = c;
      if (consistent(v) && assign(k + 1)) return true;
    }
    color_[static_cast<std::size_t>(v)] = 0;
    return false;
  }

  const Clutter& clutter_;
  const std::vector<VertexSet>& blocks_;
  std::size_t& nodes_;
  std::size_t max_nodes_;
  std::vector<int> pos_, lo_, hi_, order_, color_;
};

}  // namespace

std::optional<GridStructure> find_grid_structure(const Clutter& clutter, std::size_t max_nodes) {
  if (clutter.edges().empty()) return std::nullopt;
  std::size_t nodes = 0;
  CoverBudget budget;
  budget.max_nodes = max_nodes;
  for (const auto& matching : perfect_matchings_konig(clutter, budget)) {
    std::vector<int> perm(matching.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<VertexSet> blocks;
      for (int p : perm) blocks.push_back(matching[static_cast<std::size_t>(p)]);
      if (++nodes > max_nodes) throw ResourceError("grid_search_nodes", max_nodes);
      auto grid = Colorer(clutter, blocks, nodes, max_nodes).run();
      if (grid && is_admissible_instance(clutter, *grid).admissible) return grid;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

ExponentVector exponent_vector(const GridStructure& grid, VertexSet cover) {
  ExponentVector out;
  out.reserve(static_cast<std::size_t>(grid.g()));
  for (int j = 1; j <= grid.g(); ++j) {
    const VertexSet hit = cover & grid.block(j);
    if (hit.size() != 1)
      throw ShapeError(j, "cover meets the block in " + std::to_string(hit.size()) + " vertices, expected 1");
    const int c = grid.color_of(hit.lowest());
    if (c == 0) throw ShapeError(j, "cover vertex has no color");
    out.push_back(c);
  }
  if (cover.size() != grid.g())
    throw ShapeError(grid.g(), "cover has vertices outside the matching blocks");
  return out;
}

VertexSet vertex_set(const GridStructure& grid, const ExponentVector& exponents) {
  if (static_cast<int>(exponents.size()) != grid.g())
    throw InputError("exponent vector has length " + std::to_string(exponents.size()) + ", expected " +
                     std::to_string(grid.g()));
  VertexSet s;
  for (int j = 1; j <= grid.g(); ++j) {
    const int c = exponents[static_cast<std::size_t>(j - 1)];
    auto v = grid.vertex(c, j);
    if (!v) throw InputError("no vertex x^" + std::to_string(c) + "_" + std::to_string(j));
    s.insert(*v);
  }
  return s;
}

namespace {

ExponentVector lemma_setup(const AdmissibleInstance& inst, VertexSet cover, int i, const char* lemma) {
  const auto& grid = inst.grid;
  if (!grid.is_total()) throw LemmaHypothesisError(std::string(lemma) + ": instance is not uniform (grid not total)");
  if (i < 1 || i > grid.g())
    throw LemmaHypothesisError(std::string(lemma) + ": slot " + std::to_string(i) + " out of range");
  if (cover.size() != grid.g() || !is_minimal_vertex_cover(inst.clutter, cover))
    throw LemmaHypothesisError(std::string(lemma) + ": " + inst.clutter.format(cover) +
                               " is not a minimal vertex cover of size g");
  return exponent_vector(grid, cover);
}

VertexSet lemma_finish(const AdmissibleInstance& inst, const ExponentVector& e, const char* lemma) {
  const VertexSet out = vertex_set(inst.grid, e);
  if (!is_minimal_vertex_cover(inst.clutter, out))
    throw InvariantError(std::string(lemma) + ": result " + inst.clutter.format(out) +
                         " is not a minimal vertex cover; the instance is not admissible");
  return out;
}

}  // namespace

VertexSet raise_the_end(const AdmissibleInstance& inst, VertexSet cover, int i) {
  auto e = lemma_setup(inst, cover, i, "raise_the_end");
  const int g = inst.grid.g(), d = inst.grid.d();
  const int t = e[static_cast<std::size_t>(i - 1)];
  if (i == g) {
    if (t >= d) throw LemmaHypothesisError("raise_the_end: last exponent is already d");
  } else {
    const int l = e[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= g; ++j)
      if (e[static_cast<std::size_t>(j - 1)] != l)
        throw LemmaHypothesisError("raise_the_end: exponents after slot " + std::to_string(i) + " are not constant");
    if (l <= t) throw LemmaHypothesisError("raise_the_end: trailing exponent does not exceed the raised one");
  }
  e[static_cast<std::size_t>(i - 1)] = t + 1;
  return lemma_finish(inst, e, "raise_the_end");
}

VertexSet lower_the_front(const AdmissibleInstance& inst, VertexSet cover, int i) {
  auto e = lemma_setup(inst, cover, i, "lower_the_front");
  const int t = e[static_cast<std::size_t>(i - 1)];
  if (i == 1) {
    if (t <= 1) throw LemmaHypothesisError("lower_the_front: first exponent is already 1");
  } else {
    const int l = e[0];
    for (int j = 1; j < i; ++j)
      if (e[static_cast<std::size_t>(j - 1)] != l)
        throw LemmaHypothesisError("lower_the_front: exponents before slot " + std::to_string(i) + " are not constant");
    if (l >= t) throw LemmaHypothesisError("lower_the_front: leading exponent is not below the lowered one");
  }
  e[static_cast<std::size_t>(i - 1)] = t - 1;
  return lemma_finish(inst, e, "lower_the_front");
}

std::vector<VertexSet> consecutive_interpolation(const AdmissibleInstance& inst, VertexSet base, int i, int c,
                                                 int c2) {
  const auto& grid = inst.grid;
  if (c > c2) std::swap(c, c2);
  if (i < 1 || i > grid.g())
    throw LemmaHypothesisError("consecutive_interpolation: slot " + std::to_string(i) + " out of range");
  std::vector<int> slot;
  for (int l = c; l <= c2; ++l) {
    auto v = grid.vertex(l, i);
    if (!v)
      throw LemmaHypothesisError("consecutive_interpolation: no vertex x^" + std::to_string(l) + "_" +
                                 std::to_string(i));
    slot.push_back(*v);
  }
  if (!is_vertex_cover(inst.clutter, base.with(slot.front())) || !is_vertex_cover(inst.clutter, base.with(slot.back())))
    throw LemmaHypothesisError("consecutive_interpolation: endpoints are not both vertex covers");
  std::vector<VertexSet> out;
  for (int v : slot) {
    const VertexSet s = base.with(v);
    if (!is_vertex_cover(inst.clutter, s))
      throw InvariantError("consecutive_interpolation: " + inst.clutter.format(s) +
                           " is not a vertex cover; the instance is not admissible");
    out.push_back(s);
  }
  return out;
}

}  // namespace admcm
