#include "hfset/membership_graph.hpp"

#include <gtest/gtest.h>

#include "generators.hpp"
#include "hfset/errors.hpp"
#include "hfset/flat_system.hpp"
#include "hfset/witnesses.hpp"

namespace hfset {
namespace {

SetId omega(Universe& u) { return u.canonicalize(Apg{{{0}}, 0}); }

TEST(Closure, Examples) {
  Universe u;
  const SetId w = omega(u);
  EXPECT_EQ(closure(u, {u.empty()}).vertices, std::vector<SetId>{u.empty()});
  EXPECT_EQ(closure(u, {w}).vertices, std::vector<SetId>{w});
  EXPECT_EQ(closure(u, {u.vn(2)}).vertices, (std::vector<SetId>{u.vn(0), u.vn(1), u.vn(2)}));
}

TEST(Closure, NonClosedSliceIsRejected) {
  Universe u;
  const Slice open{{u.vn(2)}};
  EXPECT_THROW(check_closed(u, open), ValidationError);
  EXPECT_THROW(loopy_reduct(u, open), ValidationError);
}

TEST(Undirect, TwoNaturalsGiveOneEdge) {
  Universe u;
  const LoopyGraph g = loopy_reduct(u, closure(u, {u.vn(1)}));
  EXPECT_EQ(g.edges, (std::vector<Edge>{{0, 1}}));
}

TEST(Undirect, OmegaHasOneLoop) {
  Universe u;
  const SetId w = omega(u);
  const LoopyGraph g = double_edge_reduct(u, closure(u, {w}));
  EXPECT_EQ(g.edges, (std::vector<Edge>{{0, 0}}));
  EXPECT_TRUE(g.has_loop(0));
}

TEST(Undirect, MutualMembershipIsADoubleEdge) {
  Universe u;
  const Solution s =
      solve(u, FlatSystem{{{"a", u.vn(0)}, {"b", u.vn(1)}}, {{"x", {"y", "a"}}, {"y", {"x", "b"}}}});
  const Slice slice = closure(u, {s.at("x")});
  const auto x = *slice.index_of(s.at("x"));
  const auto y = *slice.index_of(s.at("y"));
  const auto multi = std::get<MultiGraph>(undirect(u, slice, ReductMode::multi));
  EXPECT_EQ(multi.multiplicity(x, y), 2);
  EXPECT_EQ(multi.multiplicity(x, *slice.index_of(u.vn(0))), 1);
  const auto dbl = std::get<LoopyGraph>(undirect(u, slice, ReductMode::double_only));
  EXPECT_EQ(dbl.edges, (std::vector<Edge>{{std::min(x, y), std::max(x, y)}}));
}

TEST(DoubleDegree, Examples) {
  Universe u;
  const SetId w = omega(u);
  EXPECT_EQ(double_degree(u, closure(u, {u.empty()}), u.empty()), 0u);
  EXPECT_EQ(double_degree(u, closure(u, {w}), w), 0u);
  const Star s = star(u, 2);
  EXPECT_EQ(double_degree(u, closure(u, {s.y}), s.y), 2u);
  EXPECT_THROW(double_degree(u, closure(u, {u.empty()}), w), PreconditionError);
}

TEST(HasLoop, Examples) {
  Universe u;
  EXPECT_TRUE(has_loop(u, omega(u)));
  EXPECT_FALSE(has_loop(u, u.empty()));
  EXPECT_FALSE(has_loop(u, u.vn(7)));
}

// Random slices mixing naturals, cyclic pictures and sets built from both.
Slice random_slice(testing::Rng& rng, Universe& u) {
  std::vector<SetId> seeds;
  for (int k = 0; k < 6; ++k) {
    seeds.push_back(u.canonicalize(testing::random_apg(rng, 6)));
    seeds.push_back(u.vn(testing::pick(rng, 6)));
  }
  for (int k = 0; k < 4; ++k) {
    seeds.push_back(u.make_set({seeds[testing::pick(rng, seeds.size())], seeds[testing::pick(rng, seeds.size())]}));
  }
  return closure(u, seeds);
}

TEST(MembershipGraphProperties, MultiplicityFollowsTheTruthTable) {
  testing::Rng rng(41);
  Universe u;
  for (int trial = 0; trial < 40; ++trial) {
    const Slice slice = random_slice(rng, u);
    ASSERT_LE(slice.vertices.size(), 80u);
    const MultiGraph multi = multi_reduct(u, slice);
    const LoopyGraph loopy = loopy_reduct(u, slice);
    const LoopyGraph dbl = double_edge_reduct(u, slice);
    const auto& vs = slice.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i; j < vs.size(); ++j) {
        const bool ij = u.is_member(vs[i], vs[j]);
        const bool ji = u.is_member(vs[j], vs[i]);
        const int expected = i == j ? (ij ? 1 : 0) : int(ij) + int(ji);
        ASSERT_EQ(multi.multiplicity(i, j), expected);
        ASSERT_EQ(loopy.has_edge(i, j), ij || ji);
        ASSERT_EQ(dbl.has_edge(i, j), i == j ? ij : (ij && ji));
      }
    }
  }
}

TEST(MembershipGraphProperties, ReductsIgnoreUnrelatedGrowth) {
  testing::Rng rng(42);
  Universe u;
  const Slice slice = random_slice(rng, u);
  const LoopyGraph before = loopy_reduct(u, slice);
  const MultiGraph multi_before = multi_reduct(u, slice);
  for (int k = 0; k < 50; ++k) u.canonicalize(testing::random_apg(rng, 8));
  EXPECT_EQ(loopy_reduct(u, slice).edges, before.edges);
  EXPECT_EQ(multi_reduct(u, slice).edges, multi_before.edges);
}

TEST(MembershipGraphProperties, DoubleEdgeNeighboursAreMembers) {
  testing::Rng rng(43);
  Universe u;
  for (int trial = 0; trial < 30; ++trial) {
    const Slice slice = random_slice(rng, u);
    const LoopyGraph dbl = double_edge_reduct(u, slice);
    for (const Edge& e : dbl.edges) {
      ASSERT_TRUE(u.is_member(slice.vertices[e.a], slice.vertices[e.b]));
      ASSERT_TRUE(u.is_member(slice.vertices[e.b], slice.vertices[e.a]));
    }
    for (SetId x : slice.vertices) {
      const LoopyGraph comp = double_edge_component(u, slice, x);
      ASSERT_EQ(comp.vertices.front(), x);
      std::size_t degree = 0;
      for (const Edge& e : comp.edges) {
        if (e.a != e.b && (e.a == 0 || e.b == 0)) ++degree;
      }
      ASSERT_EQ(degree, double_degree(u, slice, x));
    }
  }
}

}  // namespace
}  // namespace hfset
