#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "admcm/document.hpp"
#include "admcm/errors.hpp"
#include "admcm/generators.hpp"
#include "admcm/random.hpp"

using namespace admcm;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(ADMCM_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text, bool minimalize = false) {
  try {
    parse_document(text, minimalize);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Document, Minimal) {
  const auto doc = parse_document(R"({"vertices": ["a", "b"], "edges": [["a", "b"]]})");
  EXPECT_EQ(doc.clutter.vertex_count(), 2);
  EXPECT_EQ(doc.clutter.edges(), std::vector<VertexSet>{VertexSet({0, 1})});
  EXPECT_FALSE(doc.grid);
  EXPECT_TRUE(doc.warnings.empty());
}

TEST(Document, Fixture) {
  const auto doc = parse_document(read_fixture("example_g3.json"));
  const auto inst = fixture_example_g3();
  EXPECT_EQ(doc.clutter.vertex_count(), 9);
  EXPECT_EQ(doc.clutter.edges().size(), 4u);
  EXPECT_EQ(doc.clutter, inst.clutter);
  ASSERT_TRUE(doc.grid);
  EXPECT_EQ(*doc.grid, inst.grid);
}

TEST(Document, AntichainViolation) {
  const std::string text = R"({"vertices": ["a", "b", "c"], "edges": [["a"], ["a", "b"], ["c"]]})";
  EXPECT_NE(error_of(text).find("/edges/1"), std::string::npos);
  const auto doc = parse_document(text, true);
  EXPECT_EQ(doc.clutter.edges().size(), 2u);
  EXPECT_EQ(doc.warnings.size(), 1u);
}

TEST(Document, ErrorsCarryLineAndColumn) {
  const std::string unknown = "{\n  \"vertices\": [\"a\", \"b\"],\n  \"edges\": [[\"a\", \"q\"]]\n}";
  const auto e1 = error_of(unknown);
  EXPECT_NE(e1.find("line 3"), std::string::npos) << e1;
  EXPECT_NE(e1.find("q"), std::string::npos) << e1;

  const auto e2 = error_of("{\n  \"vertices\": [\"a\", \"a\"],\n  \"edges\": []\n}");
  EXPECT_NE(e2.find("line 2"), std::string::npos) << e2;

  const auto e3 = error_of("{\n  \"vertices\": [\"a\"],\n  \"edges\": [[\"a\"]],\n  \"colour\": []\n}");
  EXPECT_NE(e3.find("line 4"), std::string::npos) << e3;

  const auto e4 = error_of("{\n  \"vertices\": [\"a\"],\n  \"edges\": [[\"a\"]\n");
  EXPECT_NE(e4.find("line"), std::string::npos) << e4;

  EXPECT_NE(error_of(R"({"vertices": ["a"], "edges": [[]]})"), "");
  EXPECT_NE(error_of(R"({"vertices": ["a"]})"), "");
}

TEST(Document, BadGridIsRejected) {
  auto text = read_fixture("example_g3.json");
  const auto at = text.find("[\"z1\", \"z2\", \"z3\"]");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 18, "[\"z1\", \"z2\"]");
  EXPECT_NE(error_of(text), "");
}

TEST(Document, Digest) {
  EXPECT_EQ(content_digest(""), "cbf29ce484222325");
  EXPECT_EQ(content_digest("a"), "af63dc4c8601ec8c");
}

TEST(DocumentProperty, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + static_cast<int>(draw_below(rng, 3)), g = 2 + static_cast<int>(draw_below(rng, 3));
    const auto inst = gen_random_admissible(
        d, g, static_cast<int>(draw_below(rng, count_admissible_sequences(d, g) - static_cast<std::uint64_t>(g) + 1)), rng());
    const auto doc = parse_document(serialize_document(inst.clutter, &inst.grid));
    ASSERT_EQ(doc.clutter, inst.clutter);
    ASSERT_TRUE(doc.grid);
    ASSERT_EQ(*doc.grid, inst.grid);
    const Clutter c = gen_random_clutter(3 + static_cast<int>(draw_below(rng, 8)), 4, 1, 3, rng());
    ASSERT_EQ(parse_document(serialize_document(c)).clutter, c);
  }
}
