#include "admcm/clutter.hpp"

#include <algorithm>
#include <unordered_map>

#include "admcm/errors.hpp"
#include "admcm/simd/kernels.hpp"

namespace admcm {
namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > VertexSet::kMaxVertices)
    throw InputError("at most " + std::to_string(VertexSet::kMaxVertices) + " vertices are supported, got " +
                     std::to_string(labels.size()));
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw InputError("vertex " + std::to_string(i) + " has an empty label");
    if (!seen.emplace(labels[i], static_cast<int>(i)).second)
      throw InputError("duplicate vertex label '" + labels[i] + "'");
  }
}

void check_edges(const std::vector<VertexSet>& edges, int n) {
  const VertexSet all = VertexSet::range(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty()) throw InputError("edge " + std::to_string(i) + " is empty");
    if (!edges[i].subset_of(all)) throw InputError("edge " + std::to_string(i) + " uses an unknown vertex");
  }
}

std::vector<std::uint64_t> masks(const std::vector<VertexSet>& edges) {
  std::vector<std::uint64_t> out;
  out.reserve(edges.size());
  for (VertexSet e : edges) out.push_back(e.bits());
  return out;
}

void check_range(const Clutter& c, VertexSet s) {
  if (!s.subset_of(c.vertices()))
    throw InputError("vertex index out of range (clutter has " + std::to_string(c.vertex_count()) + " vertices)");
}

}  // namespace

Clutter::Clutter(std::vector<std::string> labels, std::vector<VertexSet> edges) : labels_(std::move(labels)) {
  check_labels(labels_);
  check_edges(edges, vertex_count());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i].subset_of(edges[j]))
        throw InputError("edge " + format(edges[i]) + " is contained in edge " + format(edges[j]) +
                         " (not a clutter; use minimalize to repair)");
  edges_ = std::move(edges);
}

Clutter Clutter::minimalized(std::vector<std::string> labels, std::vector<VertexSet> edges) {
  check_labels(labels);
  check_edges(edges, static_cast<int>(labels.size()));
  return Clutter(std::move(labels), minimal_elements(std::move(edges)));
}

Clutter Clutter::from_labels(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& edges,
                             bool minimalize) {
  check_labels(labels);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexSet s;
    for (const auto& l : edges[i]) {
      auto it = index.find(l);
      if (it == index.end()) throw InputError("edge " + std::to_string(i) + " uses unknown vertex '" + l + "'");
      s.insert(it->second);
    }
    sets.push_back(s);
  }
  return minimalize ? minimalized(std::move(labels), std::move(sets)) : Clutter(std::move(labels), std::move(sets));
}

std::optional<int> Clutter::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

VertexSet Clutter::set_of(const std::vector<std::string>& labels) const {
  VertexSet s;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw InputError("unknown vertex '" + l + "'");
    s.insert(*i);
  }
  return s;
}

std::vector<std::string> Clutter::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  for (int v : s) out.push_back(v < vertex_count() ? labels_[static_cast<std::size_t>(v)] : "#" + std::to_string(v));
  return out;
}

std::string Clutter::format(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

bool Clutter::has_edge(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool is_vertex_cover(const Clutter& clutter, VertexSet candidate) {
  check_range(clutter, candidate);
  const auto m = masks(clutter.edges());
  return simd::active().first_unhit(m, candidate.bits()) < 0;
}

bool is_minimal_vertex_cover(const Clutter& clutter, VertexSet candidate) {
  check_range(clutter, candidate);
  const auto m = masks(clutter.edges());
  const auto& k = simd::active();
  return k.first_unhit(m, candidate.bits()) < 0 && k.private_union(m, candidate.bits()) == candidate.bits();
}

namespace {

// Branches on the vertices of the first edge the partial cover misses. In the
// branch that takes the i-th vertex of that edge, the earlier vertices are
// excluded for good, so every transversal is reached along exactly one path.
// A partial cover with a member that has no private edge can never grow into a
// minimal one, which prunes everything non-minimal.
class CoverSearch {
 public:
  CoverSearch(const Clutter& c, const CoverBudget& b)
      : edges_(masks(c.edges())), budget_(b), kernels_(simd::active()) {}

  CoverList run() {
    visit(VertexSet{}, VertexSet{});
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void visit(VertexSet chosen, VertexSet excluded) {
    if (++nodes_ > budget_.max_nodes) throw ResourceError("max_nodes", budget_.max_nodes);
    const std::ptrdiff_t miss = kernels_.first_unhit(edges_, chosen.bits());
    if (miss < 0) {
      if (found_.size() >= budget_.max_covers) throw ResourceError("max_covers", budget_.max_covers);
      found_.push_back(chosen);
      return;
    }
    const VertexSet options = VertexSet(edges_[static_cast<std::size_t>(miss)]) - excluded;
    for (int v : options) {
      const VertexSet next = chosen.with(v);
      if (kernels_.private_union(edges_, next.bits()) == next.bits()) visit(next, excluded);
      excluded.insert(v);
    }
  }

  std::vector<std::uint64_t> edges_;
  CoverBudget budget_;
  const simd::KernelTable& kernels_;
  std::size_t nodes_ = 0;
  CoverList found_;
};

}  // namespace

CoverList minimal_vertex_covers(const Clutter& clutter, const CoverBudget& budget) {
  return CoverSearch(clutter, budget).run();
}

int height(const Clutter& clutter, const CoverBudget& budget) {
  if (clutter.edges().empty()) throw InputError("height is undefined for a clutter without edges");
  return minimal_vertex_covers(clutter, budget).front().size();
}

bool is_unmixed(const Clutter& clutter, const CoverBudget& budget) {
  const auto covers = minimal_vertex_covers(clutter, budget);
  return covers.front().size() == covers.back().size();
}

std::optional<int> uniform_size(const Clutter& clutter) {
  const auto& e = clutter.edges();
  if (e.empty()) return std::nullopt;
  const int s = e.front().size();
  for (VertexSet x : e)
    if (x.size() != s) return std::nullopt;
  return s;
}

Clutter alexander_dual(const Clutter& clutter, const CoverBudget& budget) {
  return Clutter(clutter.labels(), minimal_vertex_covers(clutter, budget));
}

std::vector<std::vector<VertexSet>> perfect_matchings_konig(const Clutter& clutter, const CoverBudget& budget) {
  std::vector<std::vector<VertexSet>> out;
  if (clutter.edges().empty()) return out;
  const int h = height(clutter, budget);
  const VertexSet all = clutter.vertices();
  const auto& edges = clutter.edges();
  std::vector<VertexSet> current;
  std::size_t nodes = 0;
  auto rec = [&](auto&& self, VertexSet used) -> void {
    if (++nodes > budget.max_nodes) throw ResourceError("max_nodes", budget.max_nodes);
    if (used == all) {
      if (static_cast<int>(current.size()) == h) {
        auto m = current;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
      }
      return;
    }
    if (static_cast<int>(current.size()) >= h) return;
    const int v = (all - used).lowest();
    for (VertexSet e : edges) {
      if (!e.contains(v) || e.intersects(used)) continue;
      current.push_back(e);
      self(self, used | e);
      current.pop_back();
    }
  };
  rec(rec, VertexSet{});
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet free_vertices(const Clutter& clutter) {
  VertexSet once, more;
  for (VertexSet e : clutter.edges()) {
    more |= once & e;
    once |= e;
  }
  return once - more;
}

}  // namespace admcm
