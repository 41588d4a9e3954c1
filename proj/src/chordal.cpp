#include "admcm/chordal.hpp"

#include <algorithm>
#include <array>

#include "admcm/errors.hpp"

namespace admcm {

namespace {

using Adjacency = std::array<VertexSet, VertexSet::kMaxVertices>;

Adjacency adjacency_of(const Clutter& graph) {
  Adjacency adj{};
  for (VertexSet e : graph.edges()) {
    if (e.size() != 2) throw InputError("graph edges must have exactly two vertices: " + graph.format(e));
    const int a = e.lowest();
    const int b = e.without(a).lowest();
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  return adj;
}

bool is_clique(const Adjacency& adj, VertexSet s) {
  for (int v : s)
    if (!(s.without(v)).subset_of(adj[static_cast<std::size_t>(v)])) return false;
  return true;
}

// Repeatedly removes a simplicial vertex of the graph induced on `alive`.
std::optional<std::vector<int>> peel(const Adjacency& adj, VertexSet alive) {
  std::vector<int> order;
  while (!alive.empty()) {
    bool found = false;
    for (int v : alive)
      if (is_clique(adj, adj[static_cast<std::size_t>(v)] & alive)) {
        order.push_back(v);
        alive.erase(v);
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return order;
}

bool verify_order(const Adjacency& adj, VertexSet alive, const std::vector<int>& order) {
  VertexSet seen;
  for (int v : order) {
    if (!alive.contains(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  if (seen != alive) return false;
  for (int v : order) {
    if (!is_clique(adj, adj[static_cast<std::size_t>(v)] & alive)) return false;
    alive.erase(v);
  }
  return true;
}

}  // namespace

bool verify_elimination_order(const Clutter& graph, const std::vector<int>& order) {
  return verify_order(adjacency_of(graph), graph.vertices(), order);
}

ChordalResult is_chordal(const Clutter& graph) {
  const Adjacency adj = adjacency_of(graph);
  ChordalResult out;
  auto order = peel(adj, graph.vertices());
  if (!order) return out;
  if (!verify_order(adj, graph.vertices(), *order)) throw InvariantError("elimination order failed re-verification");
  out.chordal = true;
  out.elimination_order = std::move(*order);
  return out;
}

Clutter complement_graph(const Clutter& graph) {
  const Adjacency adj = adjacency_of(graph);
  std::vector<VertexSet> edges;
  const int n = graph.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!adj[static_cast<std::size_t>(a)].contains(b)) edges.push_back(VertexSet{a, b});
  return Clutter(graph.labels(), std::move(edges));
}

bool froberg_check(const Clutter& graph) { return is_chordal(complement_graph(graph)).chordal; }

namespace {

// State of the recovery recursion: the remaining vertices, the contracted
// edges, and the two matching edges restricted to what is left.
struct Stage {
  VertexSet alive;
  std::vector<VertexSet> edges;
  VertexSet e1, e2;
};

class Recovery {
 public:
  Recovery(const Clutter& c, std::vector<std::string>& log) : clutter_(c), log_(log) {}

  // Pairs (block-1 vertex, block-2 vertex), first color first.
  std::optional<std::vector<std::pair<int, int>>> solve(const Stage& st) {
    if (++nodes_ > kMaxNodes) throw ResourceError("recovery nodes", kMaxNodes);
    const int d = st.e1.size();
    if (d == 1) return std::vector<std::pair<int, int>>{{st.e1.lowest(), st.e2.lowest()}};

    // G: the minimal covers, all of size two and split across e1 | e2.
    Adjacency g{};
    const Clutter sub = restricted(st);
    for (VertexSet c : minimal_vertex_covers(sub)) {
      if (c.size() != 2 || !c.intersects(st.e1) || !c.intersects(st.e2)) {
        note("contracted clutter has a cover " + clutter_.format(c) + " not of the form {x, y}");
        return std::nullopt;
      }
      const int a = (c & st.e1).lowest(), b = (c & st.e2).lowest();
      g[static_cast<std::size_t>(a)].insert(b);
      g[static_cast<std::size_t>(b)].insert(a);
    }
    Adjacency gc{};
    for (int v : st.alive) gc[static_cast<std::size_t>(v)] = (st.alive.without(v)) - g[static_cast<std::size_t>(v)];
    if (!peel(gc, st.alive)) {
      note("complement of the dual graph is not chordal");
      return std::nullopt;
    }

    for (int z : st.alive) {
      const VertexSet nz = gc[static_cast<std::size_t>(z)] & st.alive;
      if (!is_clique(gc, nz)) continue;
      const bool first = st.e1.contains(z);
      const VertexSet other = first ? st.e2 : st.e1;
      if (nz.intersects(other)) continue;
      for (int w : other) {
        if (!is_free(st, w)) continue;
        Stage next = contract(st, z, w);
        if (!next.alive.empty() && next.edges.empty()) continue;
        auto rest = solve(next);
        if (!rest) continue;
        const std::pair<int, int> pair = first ? std::pair{z, w} : std::pair{w, z};
        if (first)
          rest->insert(rest->begin(), pair);
        else
          rest->push_back(pair);
        return rest;
      }
    }
    note("no simplicial vertex with a free partner at " + std::to_string(d) + " colors");
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kMaxNodes = 1'000'000;

  Clutter restricted(const Stage& st) const {
    return Clutter::minimalized(clutter_.labels(), st.edges);
  }

  static bool is_free(const Stage& st, int v) {
    int count = 0;
    for (VertexSet e : st.edges) count += e.contains(v) ? 1 : 0;
    return count == 1;
  }

  // Setting both variables to 1: drop them from every edge, then minimalize.
  Stage contract(const Stage& st, int a, int b) const {
    Stage next;
    const VertexSet gone{a, b};
    next.alive = st.alive - gone;
    next.e1 = st.e1 - gone;
    next.e2 = st.e2 - gone;
    std::vector<VertexSet> edges;
    for (VertexSet e : st.edges) {
      const VertexSet r = e - gone;
      if (r.empty()) return Stage{next.alive, {}, next.e1, next.e2};
      edges.push_back(r);
    }
    next.edges = minimal_elements(std::move(edges));
    if (!std::binary_search(next.edges.begin(), next.edges.end(), next.e1) ||
        !std::binary_search(next.edges.begin(), next.edges.end(), next.e2))
      return Stage{next.alive, {}, next.e1, next.e2};
    const int d = next.e1.size();
    for (VertexSet e : next.edges)
      if (e.size() != d) return Stage{next.alive, {}, next.e1, next.e2};
    return next;
  }

  void note(std::string s) {
    if (log_.size() < 32) log_.push_back(std::move(s));
  }

  const Clutter& clutter_;
  std::vector<std::string>& log_;
  std::size_t nodes_ = 0;
};

}  // namespace

RecoveryResult recover_structure_g2(const Clutter& clutter, const PrimeField& field, const CMOptions& options) {
  const auto d = uniform_size(clutter);
  if (!d) throw InputError("recover-g2 needs a uniform clutter");
  if (height(clutter, options.covers) != 2) throw InputError("recover-g2 needs a clutter of height 2");

  RecoveryResult out;
  const CMVerdict cm = is_cohen_macaulay(clutter, field, options);
  if (cm.status != CMStatus::CM) {
    out.log.push_back(std::string("Cohen-Macaulay check returned ") + to_string(cm.status));
    return out;
  }
  const auto matchings = perfect_matchings_konig(clutter);
  if (matchings.empty()) {
    out.log.push_back("no perfect matching of Konig type");
    return out;
  }
  Recovery rec(clutter, out.log);
  for (const auto& m : matchings) {
    if (m.size() != 2) continue;
    Stage st{clutter.vertices(), clutter.edges(), m[0], m[1]};
    auto pairs = rec.solve(st);
    if (!pairs) continue;
    std::vector<VertexSet> colors;
    for (auto [x, y] : *pairs) colors.push_back(VertexSet{x, y});
    GridStructure grid(std::move(colors), {m[0], m[1]});
    if (!validate_grid(clutter, grid).empty() || !is_admissible_instance(clutter, grid).admissible) {
      out.log.push_back("peeled structure failed the admissibility check");
      continue;
    }
    out.grid = std::move(grid);
    out.log.clear();
    return out;
  }
  return out;
}

}  // namespace admcm
