#include "hfset/graph_io.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "hfset/errors.hpp"

namespace hfset {
namespace {

void expect_error_at(std::string_view text, std::size_t line, std::size_t column) {
  try {
    read_graph(text);
    FAIL() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(GraphText, WriteFormat) {
  GraphText g;
  g.vertices = {{"y", true}, {"x_0", false}, {"_0", false}};
  g.edges = {{0, 1, 2}, {1, 2, 1}};
  EXPECT_EQ(write_graph(g), "v 0 y loop\nv 1 x_0\nv 2 _0\ne 0 1 2\ne 1 2 1\n");
}

TEST(GraphText, RoundTrip) {
  testing::Rng rng(111);
  for (int trial = 0; trial < 100; ++trial) {
    GraphText g;
    const std::size_t n = 1 + testing::pick(rng, 8);
    for (std::size_t i = 0; i < n; ++i) g.vertices.push_back({"v" + std::to_string(i), testing::coin(rng, 30)});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (testing::coin(rng, 30)) g.edges.push_back({i, j, 1 + static_cast<int>(testing::pick(rng, 2))});
      }
    }
    ASSERT_EQ(read_graph(write_graph(g)), g);
  }
}

TEST(GraphText, CommentsAndBlankLines) {
  const GraphText g = read_graph("# header\nv 0 a\n\nv 1 b loop  # note\ne 0 1 1\n");
  ASSERT_EQ(g.vertices.size(), 2u);
  EXPECT_TRUE(g.vertices[1].loop);
  EXPECT_EQ(g.edges.size(), 1u);
}

TEST(GraphText, Errors) {
  expect_error_at("v 1 a\n", 1, 3);
  expect_error_at("v 0 a\ne 0 0 1\n", 2, 3);
  expect_error_at("v 0 a\nv 1 b\ne 0 1 3\n", 3, 7);
  expect_error_at("v 0 a\ne 0 4 1\n", 2, 5);
  expect_error_at("v 0 a\nv 1 b\ne 0 1 1\nv 2 c\n", 4, 1);
  expect_error_at("w 0 a\n", 1, 1);
  expect_error_at("v 0 a lop\n", 1, 7);
  expect_error_at("v x a\n", 1, 3);
}

TEST(PatternFormats, GraphAndMatrixAgree) {
  const PatternGraph from_graph = to_pattern(read_graph("v 0 a loop\nv 1 b\nv 2 c\ne 0 1 1\ne 1 2 2\n"));
  const PatternGraph from_matrix = read_pattern_matrix("1 1 0\n1 0 1\n0 1 0\n");
  EXPECT_EQ(from_graph, from_matrix);
  EXPECT_TRUE(from_matrix.has_loop(0));
}

TEST(PatternFormats, MatrixErrors) {
  EXPECT_THROW(read_pattern_matrix("0 1\n0 0\n"), ParseError);
  EXPECT_THROW(read_pattern_matrix("0 1\n1\n"), ParseError);
  EXPECT_THROW(read_pattern_matrix("0 2\n2 0\n"), ParseError);
}

TEST(ToGraphText, LoopsBecomeFlags) {
  LoopyGraph g{{SetId(0), SetId(1)}, {{0, 0}, {0, 1}}};
  const GraphText t = to_graph_text(g, {"p", "q"}, 2);
  EXPECT_TRUE(t.vertices[0].loop);
  EXPECT_FALSE(t.vertices[1].loop);
  ASSERT_EQ(t.edges.size(), 1u);
  EXPECT_EQ(t.edges[0].multiplicity, 2);
}

}  // namespace
}  // namespace hfset
