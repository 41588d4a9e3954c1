#include "admcm/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "admcm/chordal.hpp"
#include "admcm/cm.hpp"
#include "admcm/errors.hpp"
#include "admcm/generators.hpp"
#include "admcm/linear_quotients.hpp"
#include "admcm/random.hpp"

namespace admcm {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    if (passed) detail << why;
    passed = false;
  }
};

using Body = std::function<void(Outcome&, const AcceptanceOptions&)>;

struct Criterion {
  int id;
  const char* name;
  double limit;
  Body body;
};

PrimeField gf2() { return PrimeField(2); }

bool linear_quotients_under(const AdmissibleInstance& inst, const SquareFreeIdeal& dual,
                            int (*cmp)(int, const ExponentVector&, const ExponentVector&)) {
  const int d = inst.grid.d();
  const auto ord = ordering_by(dual, inst.grid, [&](const ExponentVector& a, const ExponentVector& b) { return cmp(d, a, b); });
  return check_linear_quotients(dual, ord).success;
}

bool exhaustive_cm(const Clutter& c, const AcceptanceOptions& opt) {
  CMOptions o;
  o.threads = opt.threads;
  const CMVerdict v = is_cohen_macaulay(c, gf2(), o);
  if (v.status == CMStatus::Inconclusive) throw ResourceError("faces", o.face_budget);
  return v.status == CMStatus::CM;
}

int max_extra(int d, int g) { return static_cast<int>(count_admissible_sequences(d, g)) - g; }

void c1_covers(Outcome& out, const AcceptanceOptions&) {
  const auto inst = fixture_example_g3();
  const auto covers = minimal_vertex_covers(inst.clutter);
  bool size3 = true;
  for (VertexSet c : covers) size3 = size3 && c.size() == 3;
  const bool unmixed = is_unmixed(inst.clutter);
  const bool adm = is_admissible_instance(inst.clutter, inst.grid).admissible;
  out.detail << std::boolalpha << covers.size() << " covers, all size 3: " << size3 << ", unmixed: " << unmixed << ", admissible: " << adm;
  if (covers.size() != 19 || !size3 || !unmixed || !adm) out.passed = false;
}

void c2_revlex(Outcome& out, const AcceptanceOptions&) {
  const auto inst = fixture_example_g3();
  const Clutter& c = inst.clutter;
  const auto dual = SquareFreeIdeal::alexander_dual(c);
  const auto rev = check_linear_quotients(
      dual, ordering_by(dual, inst.grid, [](const ExponentVector& a, const ExponentVector& b) { return compare_revlex(3, a, b); }));
  if (rev.success || !rev.witness) return out.fail("revlex order unexpectedly has linear quotients");
  const auto& w = *rev.witness;
  const VertexSet cur = dual.generators()[w.current], earlier = dual.generators()[w.earlier];
  out.detail << "revlex fails at " << c.format(cur) << " vs " << c.format(earlier) << " quotient " << c.format(w.quotient);
  if (cur != c.set_of({"z1", "y2", "y3"}) || earlier != c.set_of({"x1", "z2", "y3"}) ||
      w.quotient != c.set_of({"x1", "z2"}))
    out.passed = false;
  const auto g3 = check_linear_quotients(
      dual, ordering_by(dual, inst.grid, [](const ExponentVector& a, const ExponentVector& b) { return compare_g3(3, a, b); }));
  out.detail << "; g3 order " << (g3.success ? "certified" : "FAILED") << " with " << g3.steps.size() << " steps";
  if (!g3.success || g3.steps.size() != dual.size()) out.passed = false;
}

// Seeded instances for the g = 2 and g = 3 suites.
template <typename Check>
void instance_suite(Outcome& out, int count, int g, int dmin, int dmax, std::uint64_t seed0, Check&& check) {
  std::mt19937_64 rng(seed0);
  int failures = 0;
  for (int k = 0; k < count; ++k) {
    const int d = dmin + k % (dmax - dmin + 1);
    const int extra = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_extra(d, g) + 1)));
    const auto inst = sample_unmixed(d, g, extra, rng());
    std::string why;
    if (!check(inst, why)) {
      if (failures++ == 0) out.detail << "first failure (d=" << d << ", extra=" << extra << "): " << why << "; ";
    }
  }
  out.detail << failures << " failures in " << count << " instances";
  if (failures) out.passed = false;
}

void c3_g2(Outcome& out, const AcceptanceOptions& opt) {
  instance_suite(out, 200, 2, 1, 4, 0x3131, [&](const AdmissibleInstance& inst, std::string& why) {
    const auto dual = SquareFreeIdeal::alexander_dual(inst.clutter);
    if (!linear_quotients_under(inst, dual, compare_g2)) return why = "g2 order failed", false;
    if (!exhaustive_cm(inst.clutter, opt)) return why = "Reisner check says not CM", false;
    return true;
  });
}

void c4_g3(Outcome& out, const AcceptanceOptions& opt) {
  instance_suite(out, 200, 3, 1, 3, 0x4141, [&](const AdmissibleInstance& inst, std::string& why) {
    const auto dual = SquareFreeIdeal::alexander_dual(inst.clutter);
    if (!linear_quotients_under(inst, dual, compare_g3)) return why = "g3 order failed", false;
    if (!exhaustive_cm(inst.clutter, opt)) return why = "Reisner check says not CM", false;
    return true;
  });
}

// Condition (*) is rare for d <= 3 (a few per thousand draws), so the sample
// is stratified: up to 20 instances with a bad pair, then ordinary draws.
void c5_g4(Outcome& out, const AcceptanceOptions&) {
  std::mt19937_64 rng(0x5353);
  std::vector<AdmissibleInstance> sample;
  int with_star = 0, drawn = 0;
  auto draw = [&](int d) -> std::optional<AdmissibleInstance> {
    ++drawn;
    const int extra = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_extra(d, 4))));
    auto inst = sample_unmixed(d, 4, extra, rng());
    if (SquareFreeIdeal::alexander_dual(inst.clutter).size() > 20) return std::nullopt;
    return inst;
  };
  for (int k = 0; k < 40000 && with_star < 20; ++k)
    if (auto inst = draw(3); inst && satisfies_condition_star(*inst)) {
      sample.push_back(std::move(*inst));
      ++with_star;
    }
  while (sample.size() < 100)
    if (auto inst = draw(2 + static_cast<int>(draw_below(rng, 2)))) sample.push_back(std::move(*inst));

  int disagreements = 0, searched_out = 0;
  for (const auto& inst : sample) {
    const auto dual = SquareFreeIdeal::alexander_dual(inst.clutter);
    const auto star = satisfies_condition_star(inst);
    const auto found = exists_linear_quotients_ordering(dual, 22);
    searched_out += found ? 0 : 1;
    std::string why;
    if (found.has_value() == star.has_value()) why = "search and condition (*) disagree";
    if (!star) {
      try {
        const G4Order o = order_g4(inst);
        if (!check_linear_quotients(dual, o.ordering).success) why = "g4 order has no linear quotients";
      } catch (const InvariantError& e) {
        why = std::string("order audit failed: ") + e.what();
      }
    } else {
      try {
        order_g4(inst);
        why = "g4 order accepted an instance with condition (*)";
      } catch (const ConditionStarError&) {
      }
    }
    if (!why.empty() && disagreements++ == 0) out.detail << "first disagreement: " << why << "; ";
  }
  out.detail << disagreements << " disagreements in " << sample.size() << " instances (" << with_star
             << " with condition (*), " << searched_out << " without any linear-quotient order, " << drawn << " drawn)";
  if (disagreements || sample.size() != 100) out.passed = false;
}

void c6_counterexample(Outcome& out, const AcceptanceOptions&) {
  for (int g = 4; g <= 6; ++g) {
    const auto inst = gen_counterexample(g);
    const Clutter& c = inst.clutter;
    const bool ok = is_uniform(c) && is_admissible_instance(c, inst.grid).admissible && is_unmixed(c);
    if (!ok) return out.fail("g=" + std::to_string(g) + ": uniform/admissible/unmixed check failed");
    if (g == 4) {
      const auto bad = satisfies_condition_star(inst);
      if (!bad) return out.fail("g=4: no bad pair found");
      out.detail << "g=4 bad pair " << c.format(bad->first_cover) << " / " << c.format(bad->second_cover) << "; ";
    }
    const auto cx = independence_complex(c);
    const VertexSet face = c.set_of(counterexample_witness(g));
    for (std::uint32_t p : {2u, 3u, 32003u}) {
      const bool nonzero = reverify_witness(cx, face, kCounterexampleWitnessIndex, PrimeField(p));
      if (p == 2 && !nonzero) return out.fail("g=" + std::to_string(g) + ": stored witness does not re-verify");
      if (p != 2 && !nonzero) out.detail << "g=" << g << " char " << p << " disagrees; ";
    }
    out.detail << "g=" << g << " witness re-verified (dim link " << link(cx, face).dimension() << "); ";
  }
}

// Non-CM unmixed clutters are a small minority of random draws; the sample
// takes the first 50 of each verdict so both directions get exercised.
void c7_eagon_reiner(Outcome& out, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(0x7777);
  int disagreements = 0, cm = 0, not_cm = 0, drawn = 0;
  while (cm + not_cm < 100 && drawn < 100000) {
    ++drawn;
    const int n = 4 + static_cast<int>(draw_below(rng, 7));
    const int edges = 2 + static_cast<int>(draw_below(rng, 12));
    const Clutter c = gen_random_clutter(n, edges, 2, std::min(n, 3), rng());
    if (!is_unmixed(c)) continue;
    const bool a = exhaustive_cm(c, opt);
    if ((a && cm == 50) || (!a && not_cm == 50)) continue;
    (a ? cm : not_cm) += 1;
    const auto lin = has_linear_resolution(SquareFreeIdeal::alexander_dual(c), gf2());
    if (lin.status == LinearStatus::Inconclusive) throw ResourceError("betti", 0);
    if (a != (lin.status == LinearStatus::Linear) && disagreements++ == 0)
      out.detail << "first disagreement on " << c.edges().size() << " edges; ";
  }
  out.detail << disagreements << " disagreements in " << cm + not_cm << " clutters (" << cm << " CM, " << not_cm
             << " not CM, " << drawn << " drawn)";
  if (disagreements || cm + not_cm != 100) out.passed = false;
}

void c8_duality(Outcome& out, const AcceptanceOptions&) {
  std::mt19937_64 rng(0x8888);
  int failures = 0;
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + static_cast<int>(draw_below(rng, 10));
    const int edges = 1 + static_cast<int>(draw_below(rng, 8));
    const int lo = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
    const int hi = lo + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n - lo + 1)));
    const Clutter c = gen_random_clutter(n, edges, lo, hi, rng());
    if (alexander_dual(alexander_dual(c)) != c) ++failures;
  }
  out.detail << failures << " failures in 500 clutters";
  if (failures) out.passed = false;
}

void c9_lemmas(Outcome& out, const AcceptanceOptions&) {
  std::mt19937_64 rng(0x9999);
  int applied = 0, failures = 0, counts[3] = {0, 0, 0};
  int attempts = 0;
  while (applied < 500 && attempts < 200000) {
    const int d = 2 + static_cast<int>(draw_below(rng, 3));
    const int g = 2 + static_cast<int>(draw_below(rng, 3));
    const int extra = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_extra(d, g) + 1)));
    const auto inst = sample_unmixed(d, g, extra, rng());
    const auto covers = minimal_vertex_covers(inst.clutter);
    for (int tries = 0; tries < 40 && applied < 500; ++tries) {
      ++attempts;
      const VertexSet cover = covers[draw_below(rng, covers.size())];
      const int op = static_cast<int>(draw_below(rng, 3));
      const int slot = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(g)));
      std::vector<VertexSet> produced;
      try {
        if (op == 0) {
          produced.push_back(raise_the_end(inst, cover, slot));
        } else if (op == 1) {
          produced.push_back(lower_the_front(inst, cover, slot));
        } else {
          const auto e = exponent_vector(inst.grid, cover);
          const VertexSet base = cover.without(*inst.grid.vertex(e[static_cast<std::size_t>(slot - 1)], slot));
          std::vector<int> others;
          for (int c = 1; c <= d; ++c)
            if (c != e[static_cast<std::size_t>(slot - 1)] && is_vertex_cover(inst.clutter, base.with(*inst.grid.vertex(c, slot))) &&
                is_minimal_vertex_cover(inst.clutter, base.with(*inst.grid.vertex(c, slot))))
              others.push_back(c);
          if (others.empty()) continue;
          const int c2 = others[draw_below(rng, others.size())];
          produced = consecutive_interpolation(inst, base, slot, e[static_cast<std::size_t>(slot - 1)], c2);
        }
      } catch (const LemmaHypothesisError&) {
        continue;
      } catch (const InvariantError& e) {
        if (failures++ == 0) out.detail << "first failure: " << e.what() << "; ";
        ++applied;
        continue;
      }
      ++applied;
      ++counts[op];
      for (VertexSet p : produced)
        if (!is_minimal_vertex_cover(inst.clutter, p) && failures++ == 0)
          out.detail << "first failure: output " << inst.clutter.format(p) << " is not a minimal cover; ";
    }
  }
  out.detail << failures << " failures in " << applied << " applications (raise " << counts[0] << ", lower " << counts[1]
             << ", consecutive " << counts[2] << ")";
  if (failures || applied < 500) out.passed = false;
}

void c10_union(Outcome& out, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(0x1010);
  int disagreements = 0, both = 0;
  auto part = [&]() {
    const int n = 2 + static_cast<int>(draw_below(rng, 6));
    const int edges = 1 + static_cast<int>(draw_below(rng, 5));
    return gen_random_clutter(n, edges, 1, std::min(n, 3), rng());
  };
  for (int k = 0; k < 50; ++k) {
    const Clutter a = part(), b = part();
    const bool ca = exhaustive_cm(a, opt), cb = exhaustive_cm(b, opt);
    const bool cu = exhaustive_cm(disjoint_union(a, b), opt);
    both += (ca && cb) ? 1 : 0;
    if (cu != (ca && cb)) ++disagreements;
  }
  out.detail << disagreements << " disagreements in 50 unions (" << both << " with both parts CM)";
  if (disagreements) out.passed = false;
}

void c11_froberg(Outcome& out, const AcceptanceOptions&) {
  int disagreements = 0, checked = 0, linear = 0;
  auto check = [&](const Clutter& graph) {
    if (graph.edges().empty()) return;
    ++checked;
    const bool f = froberg_check(graph);
    const auto lin = has_linear_resolution(SquareFreeIdeal::edge_ideal(graph), gf2());
    if (lin.status == LinearStatus::Inconclusive) throw ResourceError("betti", 0);
    linear += f ? 1 : 0;
    if (f != (lin.status == LinearStatus::Linear) && disagreements++ == 0)
      out.detail << "first disagreement on " << graph.vertex_count() << " vertices; ";
  };
  for (int n = 1; n <= 7; ++n)
    for (const Clutter& g : graphs_up_to_isomorphism(n)) check(g);
  const int classes = checked;
  std::mt19937_64 rng(0x1111);
  for (int k = 0; k < 200; ++k) check(gen_random_graph(8 + k % 2, rng()));
  out.detail << disagreements << " disagreements on " << classes << " graph classes up to 7 vertices and 200 random graphs on 8-9 vertices ("
             << linear << " linear)";
  if (disagreements) out.passed = false;
}

void c12_recover(Outcome& out, const AcceptanceOptions& opt) {
  std::mt19937_64 rng(0x1212);
  int failures = 0;
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + k % 4;
    const int extra = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_extra(d, 2) + 1)));
    const auto inst = sample_unmixed(d, 2, extra, rng());
    const Clutter shuffled = shuffle_vertices(inst.clutter, rng());
    CMOptions o;
    o.threads = opt.threads;
    const auto rec = recover_structure_g2(shuffled, gf2(), o);
    const bool ok = rec.grid && is_admissible_instance(shuffled, *rec.grid).admissible;
    if (!ok && failures++ == 0)
      out.detail << "first failure (d=" << d << "): " << (rec.log.empty() ? "no log" : rec.log.front()) << "; ";
  }
  out.detail << failures << " failures in 100 instances";
  if (failures) out.passed = false;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "fixture-covers", 1, c1_covers},
      {2, "fixture-revlex", 1, c2_revlex},
      {3, "g2-suite", 60, c3_g2},
      {4, "g3-suite", 300, c4_g3},
      {5, "g4-condition-star", 600, c5_g4},
      {6, "counterexample", 10, c6_counterexample},
      {7, "eagon-reiner", 600, c7_eagon_reiner},
      {8, "duality-involution", 30, c8_duality},
      {9, "cover-lemmas", 60, c9_lemmas},
      {10, "disjoint-union", 300, c10_union},
      {11, "froberg", 600, c11_froberg},
      {12, "recover-g2", 120, c12_recover},
  };
  return all;
}

}  // namespace

std::vector<std::string> counterexample_witness(int g) {
  // Found by the codimension-ordered witness search (cm --witness-only) on
  // gen_counterexample(4): its link is disconnected. For larger g each extra
  // block adds a facet of its own independence complex.
  std::vector<std::string> face{"c1_b1", "c1_b2", "c1_b3", "c1_b4", "c2_b1", "c2_b3", "c2_b4",
                                "c3_b1", "c3_b2", "c3_b3", "c3_b4", "c4_b1", "c5_b2", "c5_b4"};
  for (int j = 5; j <= g; ++j)
    for (int i = 1; i <= 4; ++i) face.push_back(grid_label(i, j));
  return face;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  for (const Criterion& c : criteria()) {
    if (c.id != id) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_seconds = c.limit;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out, options);
    } catch (const std::exception& e) {
      out.fail(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = out.passed;
    r.detail = out.detail.str();
    if (r.seconds > c.limit) {
      r.passed = false;
      r.detail += " [time limit exceeded]";
    }
    return r;
  }
  throw InputError("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : criteria()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end())
      continue;
    out.push_back(run_criterion(c.id, options));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%s %2d %-20s (%.2f s / %.0f s)  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace admcm
