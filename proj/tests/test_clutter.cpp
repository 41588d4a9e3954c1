#include <gtest/gtest.h>

#include <random>

#include "admcm/clutter.hpp"
#include "admcm/errors.hpp"
#include "admcm/generators.hpp"
#include "oracles.hpp"

using namespace admcm;

namespace {

Clutter make(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& edges) {
  return Clutter::from_labels(std::move(labels), edges);
}

const Clutter kAB = make({"a", "b"}, {{"a", "b"}});
const Clutter kPath = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});

}  // namespace

TEST(VertexSet, CanonicalOrderIsSizeThenLex) {
  std::vector<VertexSet> v{VertexSet{1, 2}, VertexSet{0}, VertexSet{0, 3}, VertexSet{2}, VertexSet{0, 2}};
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<VertexSet>{VertexSet{0}, VertexSet{2}, VertexSet{0, 2}, VertexSet{0, 3}, VertexSet{1, 2}}));
}

TEST(VertexSet, SubsetEnumerationVisitsAll) {
  int count = 0;
  for_each_subset(VertexSet{1, 4, 6}, [&](VertexSet) { ++count; });
  EXPECT_EQ(count, 8);
}

TEST(Clutter, RejectsAntichainViolation) {
  EXPECT_THROW(make({"a", "b"}, {{"a", "b"}, {"a"}}), InputError);
  EXPECT_EQ(Clutter::from_labels({"a", "b"}, {{"a", "b"}, {"a"}}, true).edges(), std::vector<VertexSet>{VertexSet{0}});
}

TEST(Clutter, RejectsBadLabelsAndEmptyEdges) {
  EXPECT_THROW(make({"a", "a"}, {{"a"}}), InputError);
  EXPECT_THROW(make({"a", "b"}, {{"c"}}), InputError);
  EXPECT_THROW(Clutter({"a"}, {VertexSet{}}), InputError);
}

TEST(Clutter, VertexCoverExamples) {
  EXPECT_TRUE(is_vertex_cover(kAB, VertexSet{0}));
  EXPECT_FALSE(is_vertex_cover(kPath, VertexSet{0}));
  const auto ex = fixture_example_g3().clutter;
  EXPECT_FALSE(is_vertex_cover(ex, ex.set_of({"z1", "z2", "y3"})));
  EXPECT_THROW(is_vertex_cover(kAB, VertexSet{5}), InputError);
}

TEST(Clutter, MinimalCoverExamples) {
  EXPECT_EQ(minimal_vertex_covers(kAB), (CoverList{VertexSet{0}, VertexSet{1}}));
  const auto covers = minimal_vertex_covers(fixture_example_g3().clutter);
  EXPECT_EQ(covers.size(), 19u);
  for (VertexSet c : covers) EXPECT_EQ(c.size(), 3);
}

TEST(Clutter, CounterexampleCoversMatchSubsetOracle) {
  // All 2^20 subsets; the count is frozen as a regression constant.
  const auto ce = gen_counterexample(4).clutter;
  const auto covers = minimal_vertex_covers(ce);
  EXPECT_EQ(covers, oracle::minimal_covers(ce));
  EXPECT_EQ(covers.size(), 273u);
}

TEST(Clutter, CoverBudgetIsAResourceError) {
  const auto ce = gen_counterexample(4).clutter;
  try {
    minimal_vertex_covers(ce, CoverBudget{10, 1'000'000});
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.limit(), 10u);
  }
}

TEST(Clutter, HeightExamples) {
  EXPECT_EQ(height(kAB), 1);
  EXPECT_EQ(height(fixture_example_g3().clutter), 3);
  for (int g = 4; g <= 6; ++g) EXPECT_EQ(height(gen_counterexample(g).clutter), g);
  EXPECT_THROW(height(Clutter({"a"}, {})), InputError);
}

TEST(Clutter, UnmixedExamples) {
  EXPECT_FALSE(is_unmixed(kPath));
  EXPECT_TRUE(is_unmixed(fixture_example_g3().clutter));
  EXPECT_TRUE(is_unmixed(gen_counterexample(4).clutter));
}

TEST(Clutter, UniformExamples) {
  EXPECT_EQ(uniform_size(make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})), 2);
  EXPECT_FALSE(is_uniform(make({"a", "b", "c"}, {{"a"}, {"b", "c"}})));
  EXPECT_EQ(uniform_size(gen_counterexample(4).clutter), 5);
}

TEST(Clutter, DualExamples) {
  EXPECT_EQ(alexander_dual(kAB).edges(), (std::vector<VertexSet>{VertexSet{0}, VertexSet{1}}));
  EXPECT_EQ(alexander_dual(kPath).edges(), (std::vector<VertexSet>{VertexSet{1}, VertexSet{0, 2}}));
}

TEST(Clutter, PerfectMatchingExamples) {
  const auto two = make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  EXPECT_EQ(perfect_matchings_konig(two).size(), 1u);
  EXPECT_TRUE(perfect_matchings_konig(make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})).empty());
  const auto inst = fixture_example_g3();
  const auto ms = perfect_matchings_konig(inst.clutter);
  std::vector<VertexSet> blocks = inst.grid.matching();
  std::sort(blocks.begin(), blocks.end());
  EXPECT_NE(std::find(ms.begin(), ms.end(), blocks), ms.end());
}

TEST(Clutter, FreeVertexExamples) {
  EXPECT_EQ(free_vertices(kPath), (VertexSet{0, 2}));
  EXPECT_EQ(free_vertices(make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})), VertexSet::range(4));
  const auto inst = gen_counterexample(5);
  const VertexSet free = free_vertices(inst.clutter);
  EXPECT_TRUE(inst.grid.block(5).subset_of(free));
  for (int v = 0; v < inst.clutter.vertex_count(); ++v) {
    int degree = 0;
    for (VertexSet e : inst.clutter.edges()) degree += e.contains(v);
    EXPECT_EQ(free.contains(v), degree == 1) << inst.clutter.labels()[v];
  }
}

// Properties over random clutters.

TEST(ClutterProperty, CoversAgreeWithSubsetOracle) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int hi = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const Clutter c = gen_random_clutter(n, 1 + static_cast<int>(rng() % 8), 1, hi, rng());
    const auto covers = minimal_vertex_covers(c);
    ASSERT_EQ(covers, oracle::minimal_covers(c));
    for (VertexSet cov : covers) {
      ASSERT_TRUE(is_vertex_cover(c, cov));
      for (int v : cov) ASSERT_FALSE(is_vertex_cover(c, cov.without(v)));
    }
    int lo = 64, hi_size = 0;
    for (VertexSet cov : covers) {
      lo = std::min(lo, cov.size());
      hi_size = std::max(hi_size, cov.size());
    }
    ASSERT_EQ(height(c), lo);
    ASSERT_EQ(is_unmixed(c), lo == hi_size);
  }
}

TEST(ClutterProperty, DualIsAnInvolution) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Clutter c = gen_random_clutter(n, 1 + static_cast<int>(rng() % 8), 1, n, rng());
    ASSERT_EQ(alexander_dual(alexander_dual(c)), c);
  }
}

TEST(ClutterProperty, MatchingsAreKonig) {
  std::mt19937_64 rng(14);
  int seen = 0;
  for (int k = 0; k < 200; ++k) {
    const auto inst = gen_random_admissible(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 0, rng());
    const Clutter c = gen_random_clutter(6, 6, 2, 3, rng());
    for (const Clutter* cl : {&inst.clutter, &c}) {
      const int h = height(*cl);
      for (const auto& m : perfect_matchings_konig(*cl)) {
        ++seen;
        ASSERT_EQ(static_cast<int>(m.size()), h);
        VertexSet all;
        for (VertexSet e : m) {
          ASSERT_FALSE(all.intersects(e));
          all |= e;
        }
        ASSERT_EQ(all, cl->vertices());
      }
    }
  }
  EXPECT_GT(seen, 0);
}
