#include "hfset/bisimulation.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "naive_bisimulation.hpp"

namespace hfset {
namespace {

using Successors = std::vector<std::vector<std::uint32_t>>;

TEST(MaximumBisimulation, EmptyGraphHasNoBlocks) { EXPECT_TRUE(maximum_bisimulation(Successors{}).empty()); }

TEST(MaximumBisimulation, LeavesAreOneBlock) {
  EXPECT_EQ(maximum_bisimulation(Successors{{}, {}, {}}), (std::vector<std::uint32_t>{0, 0, 0}));
}

TEST(MaximumBisimulation, CyclesOfAnyLengthCollapse) {
  // 0 -> 0, 1 <-> 2, 3 -> 4 -> 5 -> 3: every node pictures the same set.
  const Successors g{{0}, {2}, {1}, {4}, {5}, {3}};
  EXPECT_EQ(maximum_bisimulation(g), (std::vector<std::uint32_t>(6, 0)));
}

TEST(MaximumBisimulation, SeparatesVonNeumannNaturals) {
  // 0 = {}, 1 = {0}, 2 = {0, 1}, and a second copy of 1.
  const Successors g{{}, {0}, {0, 1}, {0}};
  EXPECT_EQ(maximum_bisimulation(g), (std::vector<std::uint32_t>{0, 1, 2, 1}));
}

TEST(MaximumBisimulation, DuplicateEdgesAreIgnored) {
  EXPECT_EQ(maximum_bisimulation(Successors{{1, 1, 1}, {}}), maximum_bisimulation(Successors{{1}, {}}));
}

TEST(MaximumBisimulation, AgreesWithNaiveFixpointOnRandomDigraphs) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + testing::pick(rng, 14);
    std::vector<std::vector<std::size_t>> children(n);
    Successors succ(n);
    const unsigned density = 5 + static_cast<unsigned>(testing::pick(rng, 30));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (testing::coin(rng, density)) {
          children[a].push_back(b);
          succ[a].push_back(static_cast<std::uint32_t>(b));
        }
      }
    }
    const auto blocks = maximum_bisimulation(succ);
    const auto related = testing::naive_bisimulation(children);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        ASSERT_EQ(blocks[a] == blocks[b], related[a][b] != 0) << "trial " << trial << " nodes " << a << "," << b;
      }
    }
  }
}

TEST(MaximumBisimulation, NumbersBlocksByFirstNode) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Apg g = testing::random_apg(rng, 10);
    Successors succ;
    for (const auto& kids : g.children) succ.emplace_back(kids.begin(), kids.end());
    const auto blocks = maximum_bisimulation(succ);
    std::uint32_t next = 0;
    for (std::uint32_t b : blocks) {
      ASSERT_LE(b, next);
      if (b == next) ++next;
    }
  }
}

}  // namespace
}  // namespace hfset
