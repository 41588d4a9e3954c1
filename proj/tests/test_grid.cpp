#include <gtest/gtest.h>

#include <random>

#include "admcm/errors.hpp"
#include "admcm/generators.hpp"
#include "admcm/grid.hpp"
#include "admcm/random.hpp"
#include "oracles.hpp"

using namespace admcm;

namespace {

const AdmissibleInstance& example() {
  static const AdmissibleInstance inst = fixture_example_g3();
  return inst;
}

VertexSet S(const std::vector<std::string>& labels) { return example().clutter.set_of(labels); }

AdmissibleInstance matching_only(int d, int g) { return gen_random_admissible(d, g, 0, 1); }

}  // namespace

TEST(Grid, ValidateExamples) {
  const auto& ex = example();
  EXPECT_TRUE(validate_grid(ex.clutter, ex.grid).empty());
  GridStructure overlap({S({"x1", "x2", "x3"}), S({"x1", "y1", "y2", "y3"}), S({"z1", "z2", "z3"})}, ex.grid.matching());
  const auto v1 = validate_grid(ex.clutter, overlap);
  ASSERT_FALSE(v1.empty());
  EXPECT_NE(std::find_if(v1.begin(), v1.end(), [](const std::string& s) { return s.find("not a partition") != std::string::npos; }),
            v1.end());
  // e_1 carries two vertices of color 1
  GridStructure doubled({S({"x1", "y1", "x2", "x3"}), S({"y2", "y3"}), S({"z1", "z2", "z3"})}, ex.grid.matching());
  const auto v2 = validate_grid(ex.clutter, doubled);
  EXPECT_NE(std::find_if(v2.begin(), v2.end(), [](const std::string& s) { return s.find("meets color class") != std::string::npos; }),
            v2.end());
}

TEST(Grid, AdmissibleSetExamples) {
  const auto& g = example().grid;
  for (VertexSet e : g.matching()) EXPECT_TRUE(is_admissible_set(g, e));
  EXPECT_TRUE(is_admissible_set(g, S({"x1", "y2", "z3"})));
  EXPECT_FALSE(is_admissible_set(g, S({"x2", "y1", "z1"})));
}

TEST(Grid, AdmissibleInstanceExamples) {
  const auto& ex = example();
  EXPECT_TRUE(is_admissible_instance(ex.clutter, ex.grid).admissible);
  const auto ce = gen_counterexample(4);
  EXPECT_TRUE(is_admissible_instance(ce.clutter, ce.grid).admissible);
  std::vector<ExponentVector> extra;
  for (VertexSet e : ce.clutter.edges()) {
    std::vector<int> seq;
    for (int i = 1; i <= 5; ++i) seq.push_back(ce.grid.block_of((e & ce.grid.color_class(i)).lowest()));
    if (seq.front() != seq.back()) extra.push_back(seq);
  }
  std::sort(extra.begin(), extra.end());
  EXPECT_EQ(extra, (std::vector<ExponentVector>{{1, 1, 2, 2, 3}, {1, 1, 3, 3, 3}, {1, 2, 2, 2, 4}, {1, 2, 3, 3, 4}}));

  std::vector<VertexSet> edges = ex.clutter.edges();
  edges.push_back(S({"x2", "y1", "z3"}));
  const Clutter bigger(ex.clutter.labels(), edges);
  const auto r = is_admissible_instance(bigger, ex.grid);
  EXPECT_FALSE(r.admissible);
  EXPECT_EQ(r.offending_edges, std::vector<VertexSet>{S({"x2", "y1", "z3"})});
}

TEST(Grid, FindGridExamples) {
  const Clutter two = Clutter::from_labels({"a", "b", "c", "d", "e", "f"}, {{"a", "b", "c"}, {"d", "e", "f"}});
  const auto g1 = find_grid_structure(two);
  ASSERT_TRUE(g1);
  EXPECT_EQ(g1->d(), 3);
  EXPECT_EQ(g1->g(), 2);
  EXPECT_FALSE(find_grid_structure(Clutter::from_labels({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})));
  const Clutter shuffled = shuffle_vertices(example().clutter, 99);
  const auto g2 = find_grid_structure(shuffled);
  ASSERT_TRUE(g2);
  EXPECT_TRUE(is_admissible_instance(shuffled, *g2).admissible);
}

TEST(Grid, ExponentVectorExamples) {
  const auto& g = example().grid;
  EXPECT_EQ(exponent_vector(g, S({"z1", "y2", "y3"})), (ExponentVector{3, 2, 2}));
  const auto m = matching_only(2, 2);
  EXPECT_EQ(exponent_vector(m.grid, VertexSet{*m.grid.vertex(1, 1), *m.grid.vertex(1, 2)}), (ExponentVector{1, 1}));
  try {
    exponent_vector(g, S({"x1", "y1", "z2"}));
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    EXPECT_EQ(e.block(), 1);
  }
}

TEST(Grid, RaiseTheEndExamples) {
  const auto& ex = example();
  EXPECT_EQ(raise_the_end(ex, S({"z1", "y2", "y3"}), 3), S({"z1", "y2", "z3"}));
  EXPECT_THROW(raise_the_end(ex, S({"z1", "y2", "y3"}), 1), LemmaHypothesisError);
  const auto m = matching_only(3, 3);
  for (VertexSet c : minimal_vertex_covers(m.clutter))
    if (exponent_vector(m.grid, c)[2] < 3) {
      EXPECT_NO_THROW(raise_the_end(m, c, 3));
    }
}

TEST(Grid, LowerTheFrontExamples) {
  const auto& ex = example();
  EXPECT_EQ(lower_the_front(ex, S({"z1", "y2", "y3"}), 1), S({"y1", "y2", "y3"}));
  EXPECT_THROW(lower_the_front(ex, S({"x1", "y2", "y3"}), 1), LemmaHypothesisError);
  const auto m = matching_only(3, 3);
  for (VertexSet c : minimal_vertex_covers(m.clutter))
    if (exponent_vector(m.grid, c)[0] > 1) {
      EXPECT_NO_THROW(lower_the_front(m, c, 1));
    }
}

TEST(Grid, ConsecutiveExamples) {
  const auto& ex = example();
  EXPECT_EQ(consecutive_interpolation(ex, S({"x1", "y2"}), 3, 2, 2).size(), 1u);
  const auto three = consecutive_interpolation(ex, S({"x1", "y2"}), 3, 1, 3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(exponent_vector(ex.grid, three[0]), (ExponentVector{1, 2, 1}));
  EXPECT_EQ(exponent_vector(ex.grid, three[1]), (ExponentVector{1, 2, 2}));
  EXPECT_EQ(exponent_vector(ex.grid, three[2]), (ExponentVector{1, 2, 3}));
  for (VertexSet c : three) EXPECT_TRUE(is_vertex_cover(ex.clutter, c));
  const auto m = matching_only(4, 2);
  const VertexSet base = VertexSet::single(*m.grid.vertex(2, 1));
  EXPECT_EQ(consecutive_interpolation(m, base, 2, 1, 4).size(), 4u);
}

TEST(Generators, CounterexampleShape) {
  EXPECT_EQ(gen_counterexample(4).clutter.edges().size(), 8u);
  EXPECT_EQ(gen_counterexample(4).clutter.vertex_count(), 20);
  EXPECT_EQ(gen_counterexample(5).clutter.edges().size(), 9u);
  EXPECT_EQ(gen_counterexample(5).clutter.vertex_count(), 25);
  EXPECT_THROW(gen_counterexample(3), InputError);
  for (int g = 4; g <= 6; ++g) {
    const auto inst = gen_counterexample(g);
    EXPECT_TRUE(is_uniform(inst.clutter));
    EXPECT_TRUE(is_admissible_instance(inst.clutter, inst.grid).admissible);
    EXPECT_TRUE(is_unmixed(inst.clutter));
  }
}

TEST(Generators, RandomAdmissibleExamples) {
  EXPECT_EQ(gen_random_admissible(2, 2, 0, 5).clutter.edges().size(), 2u);
  const int all = static_cast<int>(count_admissible_sequences(3, 3)) - 3;
  EXPECT_EQ(gen_random_admissible(3, 3, all, 5).clutter.edges().size(), count_admissible_sequences(3, 3));
  EXPECT_THROW(gen_random_admissible(3, 3, all + 1, 5), InputError);
  const auto one = gen_random_admissible(3, 3, 1, 77);
  EXPECT_TRUE(is_admissible_instance(one.clutter, one.grid).admissible);
  EXPECT_EQ(gen_random_admissible(3, 4, 4, 9).clutter, gen_random_admissible(3, 4, 4, 9).clutter);
}

TEST(Generators, FixtureShape) {
  const auto& ex = example();
  EXPECT_EQ(ex.clutter.edges().size(), 4u);
  EXPECT_TRUE(is_admissible_instance(ex.clutter, ex.grid).admissible);
  EXPECT_EQ(minimal_vertex_covers(ex.clutter).size(), 19u);
}

TEST(Generators, GraphClassCounts) {
  // Number of graphs on n unlabeled vertices.
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n).size(), expected[static_cast<std::size_t>(n)]) << n;
}

// Properties.

TEST(GridProperty, UniformInstancesHaveTotalGrids) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const int d = 1 + static_cast<int>(draw_below(rng, 4)), g = 1 + static_cast<int>(draw_below(rng, 4));
    const int extra = static_cast<int>(draw_below(rng, count_admissible_sequences(d, g) - static_cast<std::uint64_t>(g) + 1));
    const auto inst = gen_random_admissible(d, g, extra, rng());
    for (int j = 1; j <= g; ++j) {
      ASSERT_EQ(inst.grid.block(j).size(), d);
      for (int i = 1; i <= d; ++i) ASSERT_EQ((inst.grid.block(j) & inst.grid.color_class(i)).size(), 1);
    }
  }
}

TEST(GridProperty, ExponentVectorRoundTrip) {
  for (int d = 1; d <= 4; ++d)
    for (int g = 1; g <= 4; ++g) {
      const GridStructure grid = full_grid(d, g);
      ExponentVector e(static_cast<std::size_t>(g), 1);
      while (true) {
        ASSERT_EQ(exponent_vector(grid, vertex_set(grid, e)), e);
        std::size_t k = 0;
        while (k < e.size() && e[k] == d) e[k++] = 1;
        if (k == e.size()) break;
        ++e[k];
      }
    }
  std::mt19937_64 rng(22);
  for (int k = 0; k < 100; ++k) {
    const auto inst = sample_unmixed(3, 3, static_cast<int>(draw_below(rng, 5)), rng());
    for (VertexSet c : minimal_vertex_covers(inst.clutter)) ASSERT_EQ(vertex_set(inst.grid, exponent_vector(inst.grid, c)), c);
  }
}

TEST(GridProperty, AdmissibleSetMatchesDefinition) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 3000; ++k) {
    const int d = 1 + static_cast<int>(draw_below(rng, 4)), g = 1 + static_cast<int>(draw_below(rng, 4));
    const GridStructure grid = full_grid(d, g);
    const VertexSet s(rng() & VertexSet::range(d * g).bits());
    if (s.empty()) continue;
    ASSERT_EQ(is_admissible_set(grid, s).ok, oracle::admissible_set(grid, s)) << s.bits();
  }
}

TEST(GridProperty, LemmaOutputsAreMinimalCovers) {
  std::mt19937_64 rng(24);
  int applied = 0;
  while (applied < 500) {
    const int d = 2 + static_cast<int>(draw_below(rng, 3)), g = 2 + static_cast<int>(draw_below(rng, 3));
    const int extra = static_cast<int>(draw_below(rng, count_admissible_sequences(d, g) - static_cast<std::uint64_t>(g) + 1));
    const auto inst = sample_unmixed(d, g, extra, rng());
    const auto covers = minimal_vertex_covers(inst.clutter);
    for (int t = 0; t < 20; ++t) {
      const VertexSet c = covers[draw_below(rng, covers.size())];
      const int slot = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(g)));
      try {
        const VertexSet out = draw_below(rng, 2) ? raise_the_end(inst, c, slot) : lower_the_front(inst, c, slot);
        ASSERT_TRUE(is_minimal_vertex_cover(inst.clutter, out));
        ++applied;
      } catch (const LemmaHypothesisError&) {
      }
    }
  }
}
