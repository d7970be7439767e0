#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hfset/membership_graph.hpp"

namespace hfset {

/// Small undirected graph with loops, given by a symmetric adjacency matrix
/// whose diagonal marks loops.
class PatternGraph {
 public:
  PatternGraph() = default;
  explicit PatternGraph(std::size_t order) : order_(order), adj_(order * order, 0) {}

  std::size_t order() const { return order_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * order_ + j] != 0; }
  bool has_loop(std::size_t i) const { return adjacent(i, i); }

  void add_edge(std::size_t i, std::size_t j);

  /// Neighbours other than i itself.
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;  // loops included
  /// Connected when loops are ignored; the empty graph is not.
  bool connected() const;

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<char> adj_;
};

PatternGraph to_pattern(const LoopyGraph& graph);

inline constexpr std::size_t kMaxIsoOrder = 10;

/// Bijection p with a ~ b iff p[a] ~ p[b] (loops included), or nullopt.
/// Exhaustive backtracking that assigns vertices of `a` in index order and
/// tries targets in increasing order, pruning on loop status, degree and
/// consistency with earlier choices; the first hit is returned.
/// Throws PreconditionError above kMaxIsoOrder vertices.
std::optional<std::vector<std::size_t>> loopy_iso(const PatternGraph& a, const PatternGraph& b);
std::optional<std::vector<std::size_t>> loopy_iso(const LoopyGraph& a, const LoopyGraph& b);

/// Whether `map` is an isomorphism from a onto b.
bool is_isomorphism(const PatternGraph& a, const PatternGraph& b, const std::vector<std::size_t>& map);

}  // namespace hfset
