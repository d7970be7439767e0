#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hfset {

/// Coarsest partition of a digraph's nodes that is stable under the
/// successor relation, i.e. the maximum bisimulation.
///
/// `successors[v]` lists the children of v; duplicates are tolerated.
/// Returns a block number per node. Blocks are numbered by the order in
/// which their smallest node appears, so the result is deterministic.
///
/// Relational coarsest partition refinement with the "process the smaller
/// half" rule and per-(node, compound block) edge counters, running in
/// O(m log n).
std::vector<std::uint32_t> maximum_bisimulation(
    std::span<const std::vector<std::uint32_t>> successors);

}  // namespace hfset
