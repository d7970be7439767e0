#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hfset/membership_graph.hpp"
#include "hfset/pattern_graph.hpp"

namespace hfset {

/// Line-based graph text:
///
///   v <index> <label> [loop]
///   e <i> <j> <multiplicity>
///
/// Vertices are numbered 0, 1, ... in emission order and come before all
/// edges. Edges have i < j and multiplicity 1 or 2; loops appear only as
/// the vertex flag.
struct GraphText {
  struct Vertex {
    std::string label;
    bool loop = false;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    std::size_t a;
    std::size_t b;
    int multiplicity;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const GraphText&, const GraphText&) = default;
};

std::string write_graph(const GraphText& graph);
/// Throws ParseError on malformed lines, out-of-order or out-of-range
/// indices, i >= j, or a multiplicity outside {1,2}.
GraphText read_graph(std::string_view text);

/// `labels` runs parallel to the graph's vertices. Plain loopy edges get
/// multiplicity `multiplicity`.
GraphText to_graph_text(const LoopyGraph& graph, const std::vector<std::string>& labels, int multiplicity = 1);
GraphText to_graph_text(const MultiGraph& graph, const std::vector<std::string>& labels);

/// Pattern from graph text; multiplicities are ignored.
PatternGraph to_pattern(const GraphText& graph);

/// Pattern from a square 0/1 matrix, one row per line, entries separated by
/// blanks. Must be symmetric; a 1 on the diagonal is a loop. `#` starts a
/// comment.
PatternGraph read_pattern_matrix(std::string_view text);

}  // namespace hfset
