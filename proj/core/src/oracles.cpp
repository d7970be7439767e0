#include "hfset/oracles.hpp"

#include "hfset/errors.hpp"
#include "hfset/pattern_graph.hpp"
#include "hfset/witnesses.hpp"

namespace hfset {

Natural BitOracle::witness(std::span<const Natural> u, std::span<const Natural> v, bool looped) {
  if (looped) throw PreconditionError("the BIT graph has no loops");
  return bit_witness(u, v);
}

bool HereditarilyFiniteOracle::adjacent(SetId a, SetId b) const { return joined(universe_, a, b); }

SetId HereditarilyFiniteOracle::witness(std::span<const SetId> u, std::span<const SetId> v, bool looped) {
  if (looped) throw PreconditionError("well-founded sets have no loops");
  return arp_witness_simple(universe_, u, v);
}

HypersetOracle::HypersetOracle(Universe& universe, std::uint64_t seed)
    : universe_(universe), seed_(seed), rng_(seed) {}

SetId HypersetOracle::vertex(std::size_t i) {
  while (pool_.size() <= i) pool_.push_back(generate());
  return pool_[i];
}

bool HypersetOracle::adjacent(SetId a, SetId b) const { return joined(universe_, a, b); }

SetId HypersetOracle::witness(std::span<const SetId> u, std::span<const SetId> v, bool looped) {
  const LoopyWitness w = arp_witness_loopy(universe_, u, v);
  return looped ? w.z2 : w.z1;
}

SetId HypersetOracle::generate() {
  switch (rng_() % 5) {
    case 0:
      return universe_.vn(rng_() % 6);
    case 1: {
      const Apg quine{{{0}}, 0};
      return universe_.canonicalize(quine);
    }
    case 2: {
      const Star s = star(universe_, 1 + rng_() % 3, rng_() % 4);
      const std::size_t pick = rng_() % (s.xs.size() + 1);
      return pick == 0 ? s.y : s.xs[pick - 1];
    }
    case 3: {
      const std::size_t k = 1 + rng_() % 3;
      PatternGraph pattern(k);
      while (!pattern.connected()) {
        pattern = PatternGraph(k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = i; j < k; ++j) {
            if (rng_() % 2 == 0) pattern.add_edge(i, j);
          }
        }
      }
      const auto ys = component(universe_, pattern, rng_() % 4);
      return ys[rng_() % ys.size()];
    }
    default: {
      if (pool_.empty()) return universe_.vn(0);
      std::vector<SetId> members;
      const std::size_t count = 1 + rng_() % 2;
      for (std::size_t c = 0; c < count; ++c) members.push_back(pool_[rng_() % pool_.size()]);
      return universe_.make_set(members);
    }
  }
}

}  // namespace hfset
