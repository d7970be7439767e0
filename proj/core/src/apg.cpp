#include "hfset/apg.hpp"

#include <string>

#include "hfset/errors.hpp"

namespace hfset {

void check_structure(const Apg& graph) {
  const std::size_t n = graph.size();
  if (n == 0) throw StructuralError("picture has no nodes");
  if (graph.root >= n) {
    throw StructuralError("root " + std::to_string(graph.root) + " out of range");
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c : graph.children[v]) {
      if (c >= n) {
        throw StructuralError("node " + std::to_string(v) + " has child " + std::to_string(c) +
                              " out of range");
      }
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{graph.root};
  seen[graph.root] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t c : graph.children[v]) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) throw StructuralError("node " + std::to_string(v) + " is unreachable from the root");
  }
}

}  // namespace hfset
