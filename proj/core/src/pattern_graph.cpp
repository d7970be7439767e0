#include "hfset/pattern_graph.hpp"

#include <algorithm>
#include <string>

#include "hfset/errors.hpp"

namespace hfset {

void PatternGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= order_ || j >= order_) throw PreconditionError("pattern edge out of range");
  adj_[i * order_ + j] = 1;
  adj_[j * order_ + i] = 1;
}

std::size_t PatternGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < order_; ++j) d += (j != i && adjacent(i, j)) ? 1 : 0;
  return d;
}

std::size_t PatternGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i; j < order_; ++j) count += adjacent(i, j) ? 1 : 0;
  }
  return count;
}

bool PatternGraph::connected() const {
  if (order_ == 0) return false;
  std::vector<char> seen(order_, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < order_; ++w) {
      if (w != v && adjacent(v, w) && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order_;
}

PatternGraph to_pattern(const LoopyGraph& graph) {
  PatternGraph p(graph.vertices.size());
  for (const Edge& e : graph.edges) p.add_edge(e.a, e.b);
  return p;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const PatternGraph& a, const PatternGraph& b)
      : a_(a), b_(b), map_(a.order()), used_(b.order(), 0) {}

  bool run(std::size_t v = 0) {
    if (v == a_.order()) return true;
    for (std::size_t t = 0; t < b_.order(); ++t) {
      if (used_[t] || !compatible(v, t)) continue;
      map_[v] = t;
      used_[t] = 1;
      if (run(v + 1)) return true;
      used_[t] = 0;
    }
    return false;
  }

  std::vector<std::size_t> map() const { return map_; }

 private:
  bool compatible(std::size_t v, std::size_t t) const {
    if (a_.has_loop(v) != b_.has_loop(t) || a_.degree(v) != b_.degree(t)) return false;
    for (std::size_t u = 0; u < v; ++u) {
      if (a_.adjacent(u, v) != b_.adjacent(map_[u], t)) return false;
    }
    return true;
  }

  const PatternGraph& a_;
  const PatternGraph& b_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> loopy_iso(const PatternGraph& a, const PatternGraph& b) {
  if (a.order() > kMaxIsoOrder || b.order() > kMaxIsoOrder) {
    throw PreconditionError("isomorphism search is limited to " + std::to_string(kMaxIsoOrder) +
                            " vertices");
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  IsoSearch search(a, b);
  if (!search.run()) return std::nullopt;
  return search.map();
}

std::optional<std::vector<std::size_t>> loopy_iso(const LoopyGraph& a, const LoopyGraph& b) {
  return loopy_iso(to_pattern(a), to_pattern(b));
}

bool is_isomorphism(const PatternGraph& a, const PatternGraph& b, const std::vector<std::size_t>& map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  std::vector<char> hit(b.order(), 0);
  for (std::size_t t : map) {
    if (t >= b.order() || hit[t]) return false;
    hit[t] = 1;
  }
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (a.adjacent(i, j) != b.adjacent(map[i], map[j])) return false;
    }
  }
  return true;
}

}  // namespace hfset
