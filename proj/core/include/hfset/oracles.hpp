#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hfset/back_and_forth.hpp"
#include "hfset/natural.hpp"
#include "hfset/rado.hpp"
#include "hfset/set_id.hpp"
#include "hfset/universe.hpp"

namespace hfset {

/// Rado's BIT graph on the naturals, enumerated 0, 1, 2, ...
class BitOracle {
 public:
  using vertex_type = Natural;

  std::string name() const { return "bit"; }
  bool loopy() const { return false; }
  Natural vertex(std::size_t i) { return Natural(i); }
  bool adjacent(const Natural& a, const Natural& b) const { return bit_adjacent(a, b); }
  bool has_loop(const Natural&) const { return false; }
  Natural witness(std::span<const Natural> u, std::span<const Natural> v, bool looped);
};

/// Membership graph of the well-founded hereditarily finite sets, enumerated
/// in Ackermann decode order. Witnesses are U ∪ {V}.
class HereditarilyFiniteOracle {
 public:
  using vertex_type = SetId;

  explicit HereditarilyFiniteOracle(Universe& universe) : universe_(universe), codec_(universe) {}

  std::string name() const { return "hf"; }
  bool loopy() const { return false; }
  SetId vertex(std::size_t i) { return codec_.decode(Natural(i)); }
  bool adjacent(SetId a, SetId b) const;
  bool has_loop(SetId a) const { return universe_.is_member(a, a); }
  SetId witness(std::span<const SetId> u, std::span<const SetId> v, bool looped);

  AckermannCodec& codec() { return codec_; }

 private:
  Universe& universe_;
  AckermannCodec codec_;
};

/// Membership graph of hypersets, loops kept and multiplicities ignored.
///
/// The enumeration is a seeded pseudo-random mix of von Neumann naturals,
/// the Quine atom, star hubs and spokes, vertices of small double-edge
/// components, and small sets built from earlier vertices. Witnesses come
/// from the loopy extension construction: z1 for loopless requests, z2 for
/// looped ones.
class HypersetOracle {
 public:
  using vertex_type = SetId;

  HypersetOracle(Universe& universe, std::uint64_t seed);

  std::string name() const { return "loopy:" + std::to_string(seed_); }
  bool loopy() const { return true; }
  SetId vertex(std::size_t i);
  bool adjacent(SetId a, SetId b) const;
  bool has_loop(SetId a) const { return universe_.is_member(a, a); }
  SetId witness(std::span<const SetId> u, std::span<const SetId> v, bool looped);

 private:
  SetId generate();

  Universe& universe_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::vector<SetId> pool_;
};

}  // namespace hfset
