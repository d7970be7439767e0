#pragma once

#include <cstddef>
#include <vector>

namespace hfset {

/// Accessible pointed graph: a rooted digraph picturing a hyperset.
/// The elements of the set pictured by node n are the sets pictured by
/// children[n]. Self-edges and cycles are allowed; every node must be
/// reachable from root.
struct Apg {
  std::vector<std::vector<std::size_t>> children;
  std::size_t root = 0;

  std::size_t size() const { return children.size(); }
};

/// Throws StructuralError if the graph is empty, has an out-of-range
/// index, or has a node unreachable from the root.
void check_structure(const Apg& graph);

}  // namespace hfset
