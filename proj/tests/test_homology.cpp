#include <gtest/gtest.h>

#include <random>

#include "admcm/complex.hpp"
#include "admcm/errors.hpp"
#include "admcm/generators.hpp"
#include "admcm/linalg.hpp"
#include "admcm/random.hpp"
#include "oracles.hpp"

using namespace admcm;

namespace {

SimplicialComplex simplex(int n) { return SimplicialComplex(n, {VertexSet::range(n)}); }

// Random sparse matrix in both representations.
void random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint32_t p, int density,
                   std::vector<SparseRow>& sparse, std::vector<std::vector<long long>>& dense) {
  sparse.assign(rows, {});
  dense.assign(rows, std::vector<long long>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (draw_below(rng, 100) >= static_cast<std::uint64_t>(density)) continue;
      const auto v = static_cast<std::uint32_t>(1 + draw_below(rng, p - 1));
      sparse[r].cols.push_back(static_cast<std::uint32_t>(c));
      sparse[r].vals.push_back(v);
      dense[r][c] = v;
    }
}

}  // namespace

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), InputError);
  EXPECT_THROW(PrimeField(4), InputError);
  EXPECT_THROW(PrimeField(32001), InputError);
  const PrimeField f(32003);
  for (std::uint32_t a : {1u, 2u, 12345u, 32002u}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(Rank, MatchesOracle) {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 3u, 32003u}) {
    const PrimeField f(p);
    for (int k = 0; k < 60; ++k) {
      const auto rows = 1 + draw_below(rng, 40), cols = 1 + draw_below(rng, 40);
      std::vector<SparseRow> sparse;
      std::vector<std::vector<long long>> dense;
      random_matrix(rng, rows, cols, p, 5 + k % 50, sparse, dense);
      const auto want = oracle::rank(dense, p);
      ASSERT_EQ(rank_mod_p(cols, sparse, f, RankMethod::Dense), want);
      ASSERT_EQ(rank_mod_p(cols, sparse, f, RankMethod::Sparse), want);
      ASSERT_EQ(rank_mod_p(cols, sparse, f), want);
    }
  }
}

TEST(Rank, CharacteristicMatters) {
  // [[1,1],[1,-1]] has rank 1 over GF(2) and 2 otherwise
  const std::vector<SparseRow> m2{{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
  EXPECT_EQ(rank_mod_p(2, m2, PrimeField(2)), 1u);
  const std::vector<SparseRow> m3{{{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}};
  EXPECT_EQ(rank_mod_p(2, m3, PrimeField(3)), 2u);
}

TEST(Complex, Basics) {
  const SimplicialComplex v;
  EXPECT_TRUE(v.is_void());
  EXPECT_EQ(v.dimension(), -2);
  EXPECT_EQ(SimplicialComplex(3, {VertexSet{}}).dimension(), -1);
  const SimplicialComplex c(4, {VertexSet{0, 1}, VertexSet{0}, VertexSet{1, 2, 3}});
  EXPECT_EQ(c.facets().size(), 2u);
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_FALSE(c.is_pure());
  EXPECT_TRUE(c.is_face(VertexSet{2, 3}));
  EXPECT_FALSE(c.is_face(VertexSet{0, 2}));
  EXPECT_EQ(c.faces().size(), 1u + 4 + 4 + 1);
  EXPECT_THROW(c.faces(5), ResourceError);
  EXPECT_EQ(c.count_faces(5), 6u);
  EXPECT_THROW(SimplicialComplex(2, {VertexSet{3}}), InputError);
}

TEST(Homology, Examples) {
  const PrimeField f2(2);
  // a simplex is acyclic
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(reduced_homology(simplex(n), f2).acyclic());
  // {∅}: H~_{-1} = 1
  EXPECT_EQ(reduced_homology(SimplicialComplex(2, {VertexSet{}}), f2).at(-1), 1u);
  // two points: H~_0 = 1
  const auto two = reduced_homology(SimplicialComplex(2, {VertexSet{0}, VertexSet{1}}), f2);
  EXPECT_EQ(two.at(0), 1u);
  EXPECT_EQ(two.euler(), 1);
  // hollow triangle: H~_1 = 1
  const SimplicialComplex hollow(3, {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}});
  for (std::uint32_t p : {2u, 3u, 32003u}) {
    const auto h = reduced_homology(hollow, PrimeField(p));
    EXPECT_EQ(h.at(0), 0u);
    EXPECT_EQ(h.at(1), 1u);
  }
  // boundary of the tetrahedron: H~_2 = 1
  std::vector<VertexSet> tris;
  for (int v = 0; v < 4; ++v) tris.push_back(VertexSet::range(4).without(v));
  EXPECT_EQ(reduced_homology(SimplicialComplex(4, tris), f2).at(2), 1u);
}

TEST(Homology, ProjectivePlaneDependsOnCharacteristic) {
  // six-vertex triangulation of RP^2: H~_1 and H~_2 are 1 over GF(2), 0 otherwise
  const std::vector<VertexSet> rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                   {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  const SimplicialComplex cx(6, rp2);
  const auto h2 = reduced_homology(cx, PrimeField(2));
  EXPECT_EQ(h2.at(1), 1u);
  EXPECT_EQ(h2.at(2), 1u);
  EXPECT_TRUE(reduced_homology(cx, PrimeField(3)).acyclic());
}

TEST(Link, Examples) {
  const SimplicialComplex c(4, {VertexSet{0, 1, 2}, VertexSet{2, 3}});
  const auto l = link(c, VertexSet{2});
  EXPECT_EQ(l.facets(), (std::vector<VertexSet>{VertexSet{3}, VertexSet{0, 1}}));
  EXPECT_FALSE(is_connected(l));
  EXPECT_TRUE(is_connected(c));
  EXPECT_EQ(link(c, VertexSet{0, 1, 2}).dimension(), -1);
  EXPECT_THROW(link(c, VertexSet{0, 3}), InputError);
}

TEST(Link, IndependenceComplexOfExample) {
  const auto inst = fixture_example_g3();
  const auto cx = independence_complex(inst.clutter);
  EXPECT_EQ(cx.facets().size(), 19u);
  EXPECT_TRUE(cx.is_pure());
  EXPECT_EQ(cx.dimension(), 5);
  EXPECT_EQ(cx.faces().size(), 316u);
}

// Properties.

TEST(HomologyProperty, EulerCharacteristicInvariant) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 200; ++k) {
    const int n = 3 + static_cast<int>(draw_below(rng, 6));
    std::vector<VertexSet> facets;
    for (int f = 0; f < 1 + static_cast<int>(draw_below(rng, 6)); ++f)
      facets.emplace_back(draw_below(rng, std::uint64_t{1} << n));
    const SimplicialComplex cx(n, facets);
    const auto faces = cx.faces();
    for (std::uint32_t p : {2u, 3u}) ASSERT_EQ(reduced_homology(cx, PrimeField(p)).euler(), reduced_euler_characteristic(faces));
  }
}

TEST(HomologyProperty, RelabelInvariant) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    const int n = 4 + static_cast<int>(draw_below(rng, 5));
    const Clutter c = gen_random_clutter(n, 2 + static_cast<int>(draw_below(rng, 6)), 1, 3, rng());
    std::vector<int> perm;
    const Clutter s = shuffle_vertices(c, rng(), &perm);
    for (std::uint32_t p : {2u, 3u}) {
      const PrimeField f(p);
      ASSERT_EQ(reduced_homology(independence_complex(c), f), reduced_homology(independence_complex(s), f));
    }
  }
}

TEST(HomologyProperty, ConeIsAcyclic) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 100; ++k) {
    const int n = 3 + static_cast<int>(draw_below(rng, 5));
    std::vector<VertexSet> facets;
    for (int f = 0; f < 1 + static_cast<int>(draw_below(rng, 5)); ++f)
      facets.push_back(VertexSet(draw_below(rng, std::uint64_t{1} << n)).with(n));
    ASSERT_TRUE(reduced_homology(SimplicialComplex(n + 1, facets), PrimeField(2)).acyclic());
  }
}
