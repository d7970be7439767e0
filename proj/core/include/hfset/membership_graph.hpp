#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hfset/set_id.hpp"
#include "hfset/universe.hpp"

namespace hfset {

/// Finite window onto the membership graph. Vertices are sorted by handle
/// and closed under elements.
struct Slice {
  std::vector<SetId> vertices;

  bool contains(SetId s) const;
  std::optional<std::size_t> index_of(SetId s) const;
};

/// Smallest element-closed slice containing the seeds.
Slice closure(const Universe& universe, std::span<const SetId> seeds);
inline Slice closure(const Universe& universe, std::initializer_list<SetId> seeds) {
  return closure(universe, std::span<const SetId>(seeds.begin(), seeds.size()));
}

/// Throws ValidationError unless the vertex set is sorted, unique, known to
/// the universe and closed under elements.
void check_closed(const Universe& universe, const Slice& slice);

struct Edge {
  std::size_t a;  // a <= b; a == b is a loop
  std::size_t b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with loops. Edges are sorted and unique.
struct LoopyGraph {
  std::vector<SetId> vertices;
  std::vector<Edge> edges;

  bool has_edge(std::size_t a, std::size_t b) const;
  bool has_loop(std::size_t a) const { return has_edge(a, a); }
};

struct MultiEdge {
  std::size_t a;  // a <= b
  std::size_t b;
  int multiplicity;  // 1 or 2; loops always 1
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

struct MultiGraph {
  std::vector<SetId> vertices;
  std::vector<MultiEdge> edges;

  /// 0 when the pair is not joined.
  int multiplicity(std::size_t a, std::size_t b) const;
};

enum class ReductMode { loopy, multi, double_only };

/// Join x and y when x∈y or y∈x; keep loops, drop multiplicities.
LoopyGraph loopy_reduct(const Universe& universe, const Slice& slice);
/// Multiplicity 2 exactly on mutual membership, 1 on one-way membership.
MultiGraph multi_reduct(const Universe& universe, const Slice& slice);
/// Only mutual memberships (double edges) and loops.
LoopyGraph double_edge_reduct(const Universe& universe, const Slice& slice);

using Reduct = std::variant<LoopyGraph, MultiGraph>;
Reduct undirect(const Universe& universe, const Slice& slice, ReductMode mode);

/// Number of y != x with x∈y and y∈x. Loops are not counted. Throws
/// PreconditionError when x is outside the slice.
std::size_t double_degree(const Universe& universe, const Slice& slice, SetId x);
bool has_loop(const Universe& universe, SetId x);

/// Connected component of x in the double-edge graph, vertices in
/// breadth-first order from x. Only members of a set can be its
/// double-edge neighbours, so the walk never leaves a closed slice.
LoopyGraph double_edge_component(const Universe& universe, const Slice& slice, SetId x);

}  // namespace hfset
