#include "hfset/pattern_graph.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "hfset/errors.hpp"

namespace hfset {
namespace {

PatternGraph cycle4_with_loop() {
  PatternGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 0);
  return g;
}

PatternGraph relabeled(const PatternGraph& g, const std::vector<std::size_t>& perm) {
  PatternGraph out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i; j < g.order(); ++j) {
      if (g.adjacent(i, j)) out.add_edge(perm[i], perm[j]);
    }
  }
  return out;
}

TEST(PatternGraph, Basics) {
  const PatternGraph g = cycle4_with_loop();
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_TRUE(g.has_loop(0));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_TRUE(g.connected());
  EXPECT_FALSE(PatternGraph(2).connected());
  EXPECT_FALSE(PatternGraph(0).connected());
  EXPECT_TRUE(PatternGraph(1).connected());
}

TEST(LoopyIso, LoopedPoints) {
  PatternGraph a(1);
  a.add_edge(0, 0);
  EXPECT_EQ(loopy_iso(a, a), std::vector<std::size_t>{0});
  EXPECT_FALSE(loopy_iso(a, PatternGraph(1)).has_value());
}

TEST(LoopyIso, RelabeledCycleWithLoop) {
  const PatternGraph g = cycle4_with_loop();
  const PatternGraph h = relabeled(g, {2, 0, 3, 1});
  const auto map = loopy_iso(g, h);
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(is_isomorphism(g, h, *map));
}

TEST(LoopyIso, CycleIsNotAPath) {
  PatternGraph cycle(4), path(4);
  for (std::size_t i = 0; i < 4; ++i) cycle.add_edge(i, (i + 1) % 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) path.add_edge(i, i + 1);
  EXPECT_FALSE(loopy_iso(cycle, path).has_value());
}

TEST(LoopyIso, LoopPlacementMatters) {
  PatternGraph a(3), b(3);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  b = a;
  a.add_edge(0, 0);  // loop at an end
  b.add_edge(1, 1);  // loop in the middle
  EXPECT_FALSE(loopy_iso(a, b).has_value());
}

TEST(LoopyIso, OrderCap) {
  EXPECT_THROW(loopy_iso(PatternGraph(kMaxIsoOrder + 1), PatternGraph(kMaxIsoOrder + 1)), PreconditionError);
}

TEST(LoopyIsoProperties, AgreesWithBruteForceCanon) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + testing::pick(rng, 6);
    const PatternGraph a = testing::random_connected_pattern(rng, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const PatternGraph b = testing::coin(rng, 50) ? relabeled(a, perm) : testing::random_connected_pattern(rng, n);
    const auto map = loopy_iso(a, b);
    ASSERT_EQ(map.has_value(), testing::pattern_canon(a) == testing::pattern_canon(b)) << "trial " << trial;
    if (map) ASSERT_TRUE(is_isomorphism(a, b, *map));
  }
}

TEST(PatternEnumeration, KnownCounts) {
  // By hand: a point with or without a loop; an edge with 0, 1 or 2 loops;
  // on three vertices the path has 6 loop placements up to its flip and the
  // triangle has 4.
  EXPECT_EQ(testing::connected_patterns(1).size(), 2u);
  EXPECT_EQ(testing::connected_patterns(2).size(), 3u);
  EXPECT_EQ(testing::connected_patterns(3).size(), 10u);
}

}  // namespace
}  // namespace hfset
