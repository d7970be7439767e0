#include "hfset/membership_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hfset/errors.hpp"

namespace hfset {
namespace {

std::size_t require_index(const Slice& slice, SetId s) {
  auto i = slice.index_of(s);
  if (!i) throw PreconditionError("set " + std::to_string(s.value()) + " is not in the slice");
  return *i;
}

template <class F>
void for_each_membership(const Universe& universe, const Slice& slice, F&& f) {
  for (std::size_t j = 0; j < slice.vertices.size(); ++j) {
    const SetId y = slice.vertices[j];
    for (SetId x : universe.elements(y)) {
      const std::size_t i = require_index(slice, x);
      f(i, j, x, y);
    }
  }
}

}  // namespace

bool Slice::contains(SetId s) const { return std::binary_search(vertices.begin(), vertices.end(), s); }

std::optional<std::size_t> Slice::index_of(SetId s) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
  if (it == vertices.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

Slice closure(const Universe& universe, std::span<const SetId> seeds) {
  std::unordered_set<SetId> seen;
  std::vector<SetId> stack;
  for (SetId s : seeds) {
    universe.elements(s);  // validates the handle
    if (seen.insert(s).second) stack.push_back(s);
  }
  while (!stack.empty()) {
    const SetId s = stack.back();
    stack.pop_back();
    for (SetId m : universe.elements(s)) {
      if (seen.insert(m).second) stack.push_back(m);
    }
  }
  Slice slice{std::vector<SetId>(seen.begin(), seen.end())};
  std::sort(slice.vertices.begin(), slice.vertices.end());
  return slice;
}

void check_closed(const Universe& universe, const Slice& slice) {
  for (std::size_t i = 0; i < slice.vertices.size(); ++i) {
    const SetId s = slice.vertices[i];
    if (!universe.contains(s)) throw ValidationError("slice contains an unknown set handle");
    if (i > 0 && !(slice.vertices[i - 1] < s)) {
      throw ValidationError("slice vertices must be sorted and unique");
    }
  }
  for (SetId s : slice.vertices) {
    for (SetId m : universe.elements(s)) {
      if (!slice.contains(m)) {
        throw ValidationError("slice is not closed: element " + std::to_string(m.value()) + " of " +
                              std::to_string(s.value()) + " is missing");
      }
    }
  }
}

bool LoopyGraph::has_edge(std::size_t a, std::size_t b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges.begin(), edges.end(), e);
}

int MultiGraph::multiplicity(std::size_t a, std::size_t b) const {
  const std::size_t lo = std::min(a, b), hi = std::max(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), MultiEdge{lo, hi, 0},
                             [](const MultiEdge& l, const MultiEdge& r) {
                               return std::pair(l.a, l.b) < std::pair(r.a, r.b);
                             });
  if (it == edges.end() || it->a != lo || it->b != hi) return 0;
  return it->multiplicity;
}

LoopyGraph loopy_reduct(const Universe& universe, const Slice& slice) {
  check_closed(universe, slice);
  LoopyGraph g{slice.vertices, {}};
  for_each_membership(universe, slice, [&](std::size_t i, std::size_t j, SetId, SetId) {
    g.edges.push_back(Edge{std::min(i, j), std::max(i, j)});
  });
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

MultiGraph multi_reduct(const Universe& universe, const Slice& slice) {
  check_closed(universe, slice);
  MultiGraph g{slice.vertices, {}};
  for_each_membership(universe, slice, [&](std::size_t i, std::size_t j, SetId x, SetId y) {
    if (i == j) {
      g.edges.push_back(MultiEdge{i, i, 1});
    } else if (universe.is_member(y, x)) {
      if (i < j) g.edges.push_back(MultiEdge{i, j, 2});
    } else {
      g.edges.push_back(MultiEdge{std::min(i, j), std::max(i, j), 1});
    }
  });
  std::sort(g.edges.begin(), g.edges.end(), [](const MultiEdge& l, const MultiEdge& r) {
    return std::pair(l.a, l.b) < std::pair(r.a, r.b);
  });
  return g;
}

LoopyGraph double_edge_reduct(const Universe& universe, const Slice& slice) {
  check_closed(universe, slice);
  LoopyGraph g{slice.vertices, {}};
  for_each_membership(universe, slice, [&](std::size_t i, std::size_t j, SetId x, SetId y) {
    if (i == j || (i < j && universe.is_member(y, x))) g.edges.push_back(Edge{i, j});
  });
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Reduct undirect(const Universe& universe, const Slice& slice, ReductMode mode) {
  switch (mode) {
    case ReductMode::loopy:
      return loopy_reduct(universe, slice);
    case ReductMode::multi:
      return multi_reduct(universe, slice);
    case ReductMode::double_only:
      return double_edge_reduct(universe, slice);
  }
  throw PreconditionError("unknown reduct mode");
}

std::size_t double_degree(const Universe& universe, const Slice& slice, SetId x) {
  require_index(slice, x);
  std::size_t degree = 0;
  for (SetId y : universe.elements(x)) {
    if (y != x && universe.is_member(x, y)) ++degree;
  }
  return degree;
}

bool has_loop(const Universe& universe, SetId x) { return universe.is_member(x, x); }

LoopyGraph double_edge_component(const Universe& universe, const Slice& slice, SetId x) {
  require_index(slice, x);
  LoopyGraph g;
  std::unordered_map<SetId, std::size_t> index{{x, 0}};
  g.vertices.push_back(x);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const SetId v = g.vertices[i];
    if (universe.is_member(v, v)) g.edges.push_back(Edge{i, i});
    for (SetId w : universe.elements(v)) {
      if (w == v || !universe.is_member(v, w)) continue;
      auto [it, inserted] = index.emplace(w, g.vertices.size());
      if (inserted) g.vertices.push_back(w);
      if (i < it->second) g.edges.push_back(Edge{i, it->second});
      else if (it->second < i) g.edges.push_back(Edge{it->second, i});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

}  // namespace hfset
