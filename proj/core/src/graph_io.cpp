#include "hfset/graph_io.hpp"

#include <charconv>

#include "hfset/errors.hpp"

namespace hfset {
namespace {

// Blank-separated words of each line, with line and column bookkeeping and
// `#` comments stripped.
struct Word {
  std::string_view text;
  std::size_t column;
};

std::vector<std::vector<Word>> split_lines(std::string_view text, std::vector<std::size_t>& line_numbers) {
  std::vector<std::vector<Word>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) words.push_back({line.substr(start, i - start), start + 1});
    }
    if (!words.empty()) {
      lines.push_back(std::move(words));
      line_numbers.push_back(line_no);
    }
  }
  return lines;
}

std::size_t number(const Word& w, std::size_t line) {
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), n);
  if (ec != std::errc{} || end != w.text.data() + w.text.size()) {
    throw ParseError(line, w.column, "expected a natural number, found '" + std::string(w.text) + "'");
  }
  return n;
}

}  // namespace

std::string write_graph(const GraphText& graph) {
  std::string out;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    out += "v " + std::to_string(i) + " " + graph.vertices[i].label;
    if (graph.vertices[i].loop) out += " loop";
    out += '\n';
  }
  for (const auto& e : graph.edges) {
    out += "e " + std::to_string(e.a) + " " + std::to_string(e.b) + " " + std::to_string(e.multiplicity) + "\n";
  }
  return out;
}

GraphText read_graph(std::string_view text) {
  std::vector<std::size_t> line_numbers;
  const auto lines = split_lines(text, line_numbers);
  GraphText graph;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& w = lines[k];
    const std::size_t line = line_numbers[k];
    if (w[0].text == "v") {
      if (!graph.edges.empty()) throw ParseError(line, 1, "vertex line after the first edge line");
      if (w.size() < 3 || w.size() > 4) throw ParseError(line, 1, "expected 'v <index> <label> [loop]'");
      if (number(w[1], line) != graph.vertices.size()) {
        throw ParseError(line, w[1].column, "expected vertex index " + std::to_string(graph.vertices.size()));
      }
      bool loop = false;
      if (w.size() == 4) {
        if (w[3].text != "loop") throw ParseError(line, w[3].column, "expected 'loop'");
        loop = true;
      }
      graph.vertices.push_back({std::string(w[2].text), loop});
    } else if (w[0].text == "e") {
      if (w.size() != 4) throw ParseError(line, 1, "expected 'e <i> <j> <multiplicity>'");
      const std::size_t a = number(w[1], line);
      const std::size_t b = number(w[2], line);
      const std::size_t m = number(w[3], line);
      if (b >= graph.vertices.size()) throw ParseError(line, w[2].column, "vertex index out of range");
      if (a >= b) throw ParseError(line, w[1].column, "edge endpoints must satisfy i < j");
      if (m != 1 && m != 2) throw ParseError(line, w[3].column, "multiplicity must be 1 or 2");
      graph.edges.push_back({a, b, static_cast<int>(m)});
    } else {
      throw ParseError(line, w[0].column, "expected 'v' or 'e', found '" + std::string(w[0].text) + "'");
    }
  }
  return graph;
}

GraphText to_graph_text(const LoopyGraph& graph, const std::vector<std::string>& labels, int multiplicity) {
  GraphText out;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) out.vertices.push_back({labels.at(i), false});
  for (const Edge& e : graph.edges) {
    if (e.a == e.b) {
      out.vertices[e.a].loop = true;
    } else {
      out.edges.push_back({e.a, e.b, multiplicity});
    }
  }
  return out;
}

GraphText to_graph_text(const MultiGraph& graph, const std::vector<std::string>& labels) {
  GraphText out;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) out.vertices.push_back({labels.at(i), false});
  for (const MultiEdge& e : graph.edges) {
    if (e.a == e.b) {
      out.vertices[e.a].loop = true;
    } else {
      out.edges.push_back({e.a, e.b, e.multiplicity});
    }
  }
  return out;
}

PatternGraph to_pattern(const GraphText& graph) {
  PatternGraph p(graph.vertices.size());
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    if (graph.vertices[i].loop) p.add_edge(i, i);
  }
  for (const auto& e : graph.edges) p.add_edge(e.a, e.b);
  return p;
}

PatternGraph read_pattern_matrix(std::string_view text) {
  std::vector<std::size_t> line_numbers;
  const auto lines = split_lines(text, line_numbers);
  const std::size_t n = lines.size();
  PatternGraph p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lines[i].size() != n) {
      throw ParseError(line_numbers[i], 1, "row has " + std::to_string(lines[i].size()) +
                                               " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Word& w = lines[i][j];
      if (w.text != "0" && w.text != "1") throw ParseError(line_numbers[i], w.column, "entries must be 0 or 1");
      if (j < i) {
        if ((w.text == "1") != p.adjacent(i, j)) {
          throw ParseError(line_numbers[i], w.column, "matrix is not symmetric");
        }
      } else if (w.text == "1") {
        p.add_edge(i, j);
      }
    }
  }
  return p;
}

}  // namespace hfset
