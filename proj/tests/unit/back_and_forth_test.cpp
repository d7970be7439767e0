#include "hfset/back_and_forth.hpp"

#include <gtest/gtest.h>

#include "hfset/errors.hpp"
#include "hfset/oracles.hpp"

namespace hfset {
namespace {

static_assert(ExtensionOracle<BitOracle>);
static_assert(ExtensionOracle<HereditarilyFiniteOracle>);
static_assert(ExtensionOracle<HypersetOracle>);

// BIT graph whose witness forgets U: any game against it must stop with a
// contract violation as soon as U is non-empty.
class ForgetfulOracle : public BitOracle {
 public:
  std::string name() const { return "forgetful"; }
  Natural witness(std::span<const Natural>, std::span<const Natural> v, bool looped) {
    return BitOracle::witness({}, v, looped);
  }
};

TEST(BackAndForth, ZeroRoundsIsEmpty) {
  BitOracle a, b;
  EXPECT_EQ(back_and_forth(a, b, 0).size(), 0u);
}

TEST(BackAndForth, BitAgainstHereditarilyFinite) {
  Universe u;
  BitOracle bit;
  HereditarilyFiniteOracle hf(u);
  const auto iso = back_and_forth(bit, hf, 10);
  ASSERT_EQ(iso.size(), 10u);
  EXPECT_TRUE(partial_iso_violations(bit, hf, iso).empty());
  // Cross-check through the coding: BIT adjacency between left vertices is
  // membership between the decoded right vertices.
  for (const auto& [n, s] : iso.pairs) {
    for (const auto& [m, t] : iso.pairs) {
      EXPECT_EQ(bit_adjacent(n, m), bit_adjacent(hf.codec().code(s), hf.codec().code(t)));
    }
  }
}

TEST(BackAndForth, HereditarilyFiniteAgainstItself) {
  Universe u;
  HereditarilyFiniteOracle a(u), b(u);
  const auto iso = back_and_forth(a, b, 12);
  EXPECT_TRUE(partial_iso_violations(a, b, iso).empty());
}

TEST(BackAndForth, TwoHypersetOracles) {
  Universe u;
  HypersetOracle a(u, 1), b(u, 2);
  const auto iso = back_and_forth(a, b, 8);
  ASSERT_EQ(iso.size(), 8u);
  EXPECT_TRUE(partial_iso_violations(a, b, iso).empty());
}

TEST(BackAndForth, HypersetGamesAcrossSeeds) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Universe u;
    HypersetOracle a(u, seed), b(u, seed + 100);
    const auto iso = back_and_forth(a, b, 10);
    EXPECT_TRUE(partial_iso_violations(a, b, iso).empty()) << seed;
  }
}

TEST(BackAndForth, LoopModesMustAgree) {
  Universe u;
  BitOracle bit;
  HypersetOracle loopy(u, 0);
  EXPECT_THROW(back_and_forth(bit, loopy, 2), PreconditionError);
}

TEST(BackAndForth, BadWitnessIsAContractViolation) {
  BitOracle honest;
  ForgetfulOracle forgetful;
  try {
    back_and_forth(honest, forgetful, 6);
    FAIL() << "expected a contract violation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("forgetful"), std::string::npos);
  }
}

TEST(PartialIsoViolations, DetectsBrokenMaps) {
  BitOracle a, b;
  PartialIso<Natural, Natural> iso;
  iso.pairs = {{0, 0}, {1, 2}};  // 0~1 in BIT but 0 and 2 are not adjacent
  EXPECT_EQ(partial_iso_violations(a, b, iso).size(), 1u);
  iso.pairs = {{0, 5}, {1, 5}};
  EXPECT_EQ(partial_iso_violations(a, b, iso).size(), 1u);
}

}  // namespace
}  // namespace hfset
