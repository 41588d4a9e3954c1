#include "admcm/linear_quotients.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace admcm {

std::vector<VertexSet> colon_step(std::span<const VertexSet> prefix, VertexSet u) {
  std::vector<VertexSet> q;
  q.reserve(prefix.size());
  for (VertexSet p : prefix) q.push_back(p - u);
  return minimal_elements(std::move(q));
}

LinearQuotientReport check_linear_quotients(const SquareFreeIdeal& ideal, std::span<const std::size_t> ordering) {
  const auto& gens = ideal.generators();
  if (ordering.size() != gens.size()) throw InputError("ordering is not a permutation of the generators");
  std::vector<char> used(gens.size(), 0);
  for (std::size_t k : ordering) {
    if (k >= gens.size() || used[k]) throw InputError("ordering is not a permutation of the generators");
    used[k] = 1;
  }
  for (std::size_t k = 1; k < ordering.size(); ++k)
    if (gens[ordering[k]].size() < gens[ordering[k - 1]].size())
      throw InputError("ordering decreases in degree at position " + std::to_string(k));

  LinearQuotientReport report;
  report.ordering.assign(ordering.begin(), ordering.end());
  std::vector<VertexSet> prefix;
  for (std::size_t pos = 0; pos < ordering.size(); ++pos) {
    const VertexSet u = gens[ordering[pos]];
    ColonStep step;
    step.generator = ordering[pos];
    step.colon = colon_step(prefix, u);
    step.linear = std::all_of(step.colon.begin(), step.colon.end(), [](VertexSet s) { return s.size() == 1; });
    if (!step.linear && !report.witness) {
      VertexSet linear_part;
      for (VertexSet s : step.colon)
        if (s.size() == 1) linear_part |= s;
      for (std::size_t k = 0; k < pos; ++k) {
        const VertexSet q = gens[ordering[k]] - u;
        // A minimal colon generator of degree >= 2 with no linear divisor.
        if (q.size() >= 2 && !q.intersects(linear_part) &&
            std::find(step.colon.begin(), step.colon.end(), q) != step.colon.end()) {
          report.witness = FailureWitness{pos, ordering[pos], ordering[k], q};
          break;
        }
      }
    }
    report.steps.push_back(std::move(step));
    prefix.push_back(u);
  }
  report.success = !report.witness.has_value();
  return report;
}

namespace {

void check_vector(int d, const ExponentVector& x, std::size_t length) {
  if (length != 0 && x.size() != length)
    throw InputError("exponent vector has length " + std::to_string(x.size()) + ", expected " +
                     std::to_string(length));
  for (int e : x)
    if (e < 1 || e > d) throw InputError("exponent " + std::to_string(e) + " outside 1.." + std::to_string(d));
}

int sign(int v) { return (v > 0) - (v < 0); }

int g2_pair(int a, int b, int m, int q) {
  if (a != m) return sign(a - m);
  return sign(q - b);
}

}  // namespace

int compare_g2(int d, const ExponentVector& x, const ExponentVector& y) {
  check_vector(d, x, 2);
  check_vector(d, y, 2);
  return g2_pair(x[0], x[1], y[0], y[1]);
}

int compare_g3(int d, const ExponentVector& x, const ExponentVector& y) {
  check_vector(d, x, 3);
  check_vector(d, y, 3);
  if (int c = g2_pair(x[0], x[2], y[0], y[2]); c != 0) return c;
  return sign(y[1] - x[1]);
}

int compare_g3_alt(int d, const ExponentVector& x, const ExponentVector& y) {
  if (d != 3) throw InputError("the alternative height-3 order is only defined for d = 3");
  check_vector(d, x, 3);
  check_vector(d, y, 3);
  // rank[(a-1)*3 + (c-1)]
  static constexpr std::array<int, 9> rank{
      4, 2, 0,  // (1,1) (1,2) (1,3)
      5, 3, 1,  // (2,1) (2,2) (2,3)
      8, 7, 6,  // (3,1) (3,2) (3,3)
  };
  const int rx = rank[static_cast<std::size_t>((x[0] - 1) * 3 + (x[2] - 1))];
  const int ry = rank[static_cast<std::size_t>((y[0] - 1) * 3 + (y[2] - 1))];
  if (rx != ry) return sign(rx - ry);
  return sign(y[1] - x[1]);
}

int compare_lex(int d, const ExponentVector& x, const ExponentVector& y) {
  check_vector(d, x, 0);
  check_vector(d, y, x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != y[k]) return sign(x[k] - y[k]);
  return 0;
}

int compare_revlex(int d, const ExponentVector& x, const ExponentVector& y) {
  check_vector(d, x, 0);
  check_vector(d, y, x.size());
  for (std::size_t k = x.size(); k-- > 0;)
    if (x[k] != y[k]) return sign(y[k] - x[k]);
  return 0;
}

std::vector<std::size_t> ordering_by(const SquareFreeIdeal& ideal, const GridStructure& grid,
                                     const ExponentCompare& compare) {
  const auto& gens = ideal.generators();
  std::vector<ExponentVector> vec;
  vec.reserve(gens.size());
  for (VertexSet s : gens) vec.push_back(exponent_vector(grid, s));
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return compare(vec[a], vec[b]) < 0; });
  return order;
}

namespace {

void require_g4(const AdmissibleInstance& inst) {
  if (inst.grid.g() != 4) throw InputError("condition (*) needs g = 4, got g = " + std::to_string(inst.grid.g()));
  if (!inst.grid.is_total()) throw InputError("condition (*) needs a uniform instance");
  if (!is_unmixed(inst.clutter)) throw InputError("condition (*) needs an unmixed instance");
}

int code(const ExponentVector& e, int d) {
  int c = 0;
  for (std::size_t k = e.size(); k-- > 0;) c = c * d + (e[k] - 1);
  return c;
}

}  // namespace

std::optional<BadPair> satisfies_condition_star(const AdmissibleInstance& inst) {
  require_g4(inst);
  const G4Comparator index(inst);
  const auto covers = minimal_vertex_covers(inst.clutter);
  std::vector<ExponentVector> vec;
  for (VertexSet c : covers) vec.push_back(exponent_vector(inst.grid, c));
  for (std::size_t p = 0; p < vec.size(); ++p) {
    for (std::size_t q = p + 1; q < vec.size(); ++q) {
      const auto& x = vec[p];
      const auto& y = vec[q];
      if (x[0] != y[0] || x[3] != y[3]) continue;
      const ExponentVector swap1{x[0], x[1], y[2], x[3]};
      const ExponentVector swap2{x[0], y[1], x[2], x[3]};
      if (!index.is_cover(swap1) && !index.is_cover(swap2)) return BadPair{x, y, covers[p], covers[q]};
    }
  }
  return std::nullopt;
}

G4Comparator::G4Comparator(const AdmissibleInstance& inst) : d_(inst.grid.d()) {
  if (inst.grid.g() != 4) throw InputError("the g = 4 order needs g = 4");
  std::size_t total = 1;
  for (int k = 0; k < 4; ++k) total *= static_cast<std::size_t>(d_);
  covers_.assign(total, 0);
  for (VertexSet c : minimal_vertex_covers(inst.clutter)) {
    if (c.size() != 4) continue;
    covers_[static_cast<std::size_t>(code(exponent_vector(inst.grid, c), d_))] = 1;
  }
}

bool G4Comparator::is_cover(const ExponentVector& e) const {
  return covers_[static_cast<std::size_t>(code(e, d_))] != 0;
}

bool G4Comparator::rule3(int a, int b, int s, int t, int last) const {
  for (int c = t + 1; c <= d_; ++c)
    if (is_cover({a, b, c, last}) && !is_cover({a, s, c, last})) return true;
  return false;
}

int G4Comparator::operator()(const ExponentVector& x, const ExponentVector& y) const {
  check_vector(d_, x, 4);
  check_vector(d_, y, 4);
  if (int c = g2_pair(x[0], x[3], y[0], y[3]); c != 0) return c;
  if (x[2] != y[2]) return sign(y[2] - x[2]);
  if (x[1] == y[1]) return 0;
  const int a = x[0], t = x[2], last = x[3];
  if (rule3(a, x[1], y[1], t, last)) return -1;
  if (rule3(a, y[1], x[1], t, last)) return 1;
  return sign(y[1] - x[1]);
}

G4Order order_g4(const AdmissibleInstance& inst) {
  if (auto bad = satisfies_condition_star(inst)) throw ConditionStarError(*bad);
  const G4Comparator cmp(inst);
  const auto dual = SquareFreeIdeal::alexander_dual(inst.clutter);
  const auto& gens = dual.generators();
  const std::size_t r = gens.size();
  std::vector<ExponentVector> vec;
  for (VertexSet s : gens) vec.push_back(exponent_vector(inst.grid, s));

  G4Order out;
  std::vector<signed char> m(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i * r + j] = static_cast<signed char>(cmp(vec[i], vec[j]));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const int c = m[i * r + j];
      if (c != -m[j * r + i] || ((i == j) != (c == 0)))
        throw InvariantError("g = 4 order is not antisymmetric on " + std::to_string(i) + ", " + std::to_string(j));
      ++out.audited_pairs;
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (m[i * r + j] >= 0) continue;
      for (std::size_t k = 0; k < r; ++k) {
        if (m[j * r + k] < 0 && m[i * r + k] >= 0)
          throw InvariantError("g = 4 order is not transitive");
        ++out.audited_triples;
      }
    }
  out.ordering.resize(r);
  std::iota(out.ordering.begin(), out.ordering.end(), std::size_t{0});
  std::sort(out.ordering.begin(), out.ordering.end(),
            [&](std::size_t a, std::size_t b) { return m[a * r + b] < 0; });
  for (std::size_t k : out.ordering) out.sorted.push_back(vec[k]);
  return out;
}

namespace {

class OrderingSearch {
 public:
  explicit OrderingSearch(const std::vector<VertexSet>& gens) : r_(gens.size()) {
    quotient_.resize(r_ * r_);
    for (std::size_t u = 0; u < r_; ++u)
      for (std::size_t j = 0; j < r_; ++j) quotient_[u * r_ + j] = (gens[j] - gens[u]).bits();
    dead_.assign(std::size_t{1} << r_, 0);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (dfs(0)) return order_;
    return std::nullopt;
  }

 private:
  bool linear(std::uint64_t prefix, std::size_t u) const {
    const std::uint64_t* q = quotient_.data() + u * r_;
    std::uint64_t single = 0;
    for (std::uint64_t rest = prefix; rest; rest &= rest - 1) {
      const std::uint64_t x = q[std::countr_zero(rest)];
      if (std::popcount(x) == 1) single |= x;
    }
    for (std::uint64_t rest = prefix; rest; rest &= rest - 1)
      if ((q[std::countr_zero(rest)] & single) == 0) return false;
    return true;
  }

  bool dfs(std::uint64_t prefix) {
    if (order_.size() == r_) return true;
    if (dead_[prefix]) return false;
    for (std::size_t u = 0; u < r_; ++u) {
      if ((prefix >> u) & 1u) continue;
      if (!linear(prefix, u)) continue;
      order_.push_back(u);
      if (dfs(prefix | (std::uint64_t{1} << u))) return true;
      order_.pop_back();
    }
    dead_[prefix] = 1;
    return false;
  }

  std::size_t r_;
  std::vector<std::uint64_t> quotient_;
  std::vector<char> dead_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<std::vector<std::size_t>> exists_linear_quotients_ordering(const SquareFreeIdeal& ideal,
                                                                        int max_generators) {
  if (ideal.size() == 0) return std::vector<std::size_t>{};
  if (!ideal.degree()) throw InputError("ordering search needs an equigenerated ideal");
  if (max_generators > 30) max_generators = 30;
  if (ideal.size() > static_cast<std::size_t>(max_generators))
    throw ResourceError("max_generators", static_cast<std::size_t>(max_generators));
  return OrderingSearch(ideal.generators()).run();
}

OrderName parse_order_name(std::string_view name) {
  if (name == "paper-g2") return OrderName::GridG2;
  if (name == "paper-g3") return OrderName::GridG3;
  if (name == "paper-g3-alt") return OrderName::GridG3Alt;
  if (name == "paper-g4") return OrderName::GridG4;
  if (name == "lex") return OrderName::Lex;
  if (name == "revlex") return OrderName::Revlex;
  if (name == "search") return OrderName::Search;
  throw InputError("unknown ordering '" + std::string(name) + "'");
}

std::string_view to_string(OrderName name) {
  switch (name) {
    case OrderName::GridG2: return "paper-g2";
    case OrderName::GridG3: return "paper-g3";
    case OrderName::GridG3Alt: return "paper-g3-alt";
    case OrderName::GridG4: return "paper-g4";
    case OrderName::Lex: return "lex";
    case OrderName::Revlex: return "revlex";
    case OrderName::Search: return "search";
  }
  return "?";
}

}  // namespace admcm
