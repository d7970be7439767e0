#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hfset/pattern_graph.hpp"
#include "hfset/set_id.hpp"
#include "hfset/universe.hpp"

namespace hfset {

/// Outcome of re-checking a construction: the sets involved and a named
/// list of conditions that must all hold.
struct WitnessReport {
  std::vector<SetId> witnesses;
  std::vector<std::pair<std::string, bool>> checks;

  bool ok() const;
  std::optional<std::string> first_failure() const;
  void add(std::string name, bool holds) { checks.emplace_back(std::move(name), holds); }
};

/// Undirected membership: a∈b or b∈a.
bool joined(const Universe& universe, SetId a, SetId b);

/// z = U ∪ {V}. Joined to every member of U and to nothing in V, provided
/// every input is well-founded. Throws PreconditionError when U and V meet
/// or some input is not well-founded.
SetId arp_witness_simple(Universe& universe, std::span<const SetId> u, std::span<const SetId> v);
WitnessReport verify_simple_arp(const Universe& universe, std::span<const SetId> u,
                                std::span<const SetId> v, SetId z);

struct LoopyWitness {
  SetId z1;  // {x} ∪ U, loopless
  SetId z2;  // the solution of z = {z, x} ∪ U, looped
  SetId x;
};

/// Loopless and looped extension witnesses for arbitrary hypersets.
///
/// x is the first block {vn(N), ..., vn(N+|U|+2)} (N = 0, 1, ...) that
/// avoids U, V, the members of U and V, and the members of members of V.
/// Throws PreconditionError when U and V meet.
LoopyWitness arp_witness_loopy(Universe& universe, std::span<const SetId> u, std::span<const SetId> v);
WitnessReport verify_loopy_arp(const Universe& universe, std::span<const SetId> u,
                               std::span<const SetId> v, const LoopyWitness& w);

struct Star {
  SetId y;
  std::vector<SetId> xs;
  std::vector<SetId> atoms;
};

/// Solves y = {x_0..x_{n-1}}, x_i = {y, a_i} with a_i = vn(atom_seed + i),
/// which puts y on exactly n double edges.
Star star(Universe& universe, std::size_t n, std::size_t atom_seed = 0);
WitnessReport verify_star(const Universe& universe, const Star& s);

/// Solves y_i = {a_i} ∪ {y_j : j adjacent to i} (a loop at i puts y_i in
/// itself) with a_i = vn(atom_seed + i). The double-edge component of y_0
/// is then a copy of the pattern. Throws PreconditionError when the pattern
/// is empty or disconnected.
std::vector<SetId> component(Universe& universe, const PatternGraph& pattern, std::size_t atom_seed = 0);
WitnessReport verify_component(const Universe& universe, const PatternGraph& pattern,
                               std::span<const SetId> ys, std::size_t atom_seed = 0);

}  // namespace hfset
