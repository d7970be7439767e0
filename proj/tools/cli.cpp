#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <variant>

#include "hfset/back_and_forth.hpp"
#include "hfset/errors.hpp"
#include "hfset/flat_system.hpp"
#include "hfset/graph_io.hpp"
#include "hfset/membership_graph.hpp"
#include "hfset/oracles.hpp"
#include "hfset/rado.hpp"
#include "hfset/serialize.hpp"
#include "hfset/system_parser.hpp"
#include "hfset/universe.hpp"
#include "hfset/witnesses.hpp"

namespace hfset::cli {
namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kLibraryError = 3;

// Carries a file name along with a parse failure so the diagnostic can say
// FILE:LINE:COL.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t universe_cap() {
  const char* raw = std::getenv("HFSET_MAX_SETS");
  if (raw == nullptr || *raw == '\0') return Universe::kUnbounded;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(raw, &end, 10);
  if (*end != '\0' || cap == 0) throw FileError("HFSET_MAX_SETS must be a positive integer");
  return static_cast<std::size_t>(cap);
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <class F>
auto with_file(const std::string& path, F&& parse) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw FileError(path + ":" + e.what());
  }
}

struct Solved {
  FlatSystem system;
  Solution solution;
};

Solved solve_file(Universe& u, const std::string& path) {
  Solved s;
  s.system = with_file(path, [&](const std::string& text) { return parse_system(u, text); });
  s.solution = solve(u, s.system);
  return s;
}

void print_checks(const WitnessReport& report, std::ostream& out) {
  for (const auto& [name, holds] : report.checks) out << "# check " << name << " " << (holds ? "ok" : "FAILED") << "\n";
}

int report_status(const WitnessReport& report, std::ostream& err) {
  if (auto failed = report.first_failure()) {
    err << "hfset: check failed: " << *failed << "\n";
    return kCheckFailed;
  }
  return kOk;
}

// Vertex labels: a name from the input when there is one, the Ackermann
// code for other well-founded sets, and _k otherwise.
std::vector<std::string> labels_for(const Universe& u, const std::vector<SetId>& vertices,
                                    const std::unordered_map<SetId, std::string>& names) {
  std::vector<std::string> labels;
  std::unordered_map<SetId, Natural> codes;
  std::size_t anonymous = 0;
  for (SetId v : vertices) {
    if (auto it = names.find(v); it != names.end()) {
      labels.push_back(it->second);
    } else if (u.is_well_founded(v)) {
      labels.push_back(ackermann_code(u, v, codes).to_string());
    } else {
      labels.push_back("_" + std::to_string(anonymous++));
    }
  }
  return labels;
}

// Normal form of `roots` headed by a comment line such as "# z1 = ν0".
void print_named(const Universe& u, const std::vector<SetId>& roots, const std::vector<std::string>& labels,
                 std::ostream& out) {
  const NormalForm nf = normal_form(u, roots);
  out << "#";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out << (i == 0 ? " " : ", ") << labels[i] << " = \xCE\xBD" << nf.root_names[i];
  }
  out << "\n" << nf.text;
}

int cmd_solve(const std::string& path, std::ostream& out) {
  Universe u(universe_cap());
  const Solved s = solve_file(u, path);
  std::vector<SetId> roots;
  for (const Equation& eq : s.system.equations) roots.push_back(s.solution.at(eq.name));
  out << serialize_system(u, roots);
  return kOk;
}

int cmd_undirect(const std::string& path, const std::string& mode, std::ostream& out) {
  Universe u(universe_cap());
  const Solved s = solve_file(u, path);
  std::vector<SetId> seeds;
  std::unordered_map<SetId, std::string> names;
  for (const Equation& eq : s.system.equations) {
    seeds.push_back(s.solution.at(eq.name));
    names.emplace(s.solution.at(eq.name), eq.name);
  }
  for (const Atom& a : s.system.atoms) {
    seeds.push_back(a.value);
    names.emplace(a.value, a.name);
  }
  const Slice slice = closure(u, seeds);
  const auto labels = labels_for(u, slice.vertices, names);
  if (mode == "loopy") {
    out << write_graph(to_graph_text(loopy_reduct(u, slice), labels));
  } else if (mode == "multi") {
    out << write_graph(to_graph_text(multi_reduct(u, slice), labels));
  } else {
    out << write_graph(to_graph_text(double_edge_reduct(u, slice), labels, 2));
  }
  return kOk;
}

int cmd_witness(bool loopy, const std::string& u_text, const std::string& v_text, std::ostream& out,
                std::ostream& err) {
  Universe u(universe_cap());
  auto parse_list = [&](const std::string& flag, const std::string& text) {
    try {
      return parse_set_list(u, text);
    } catch (const ParseError& e) {
      throw FileError(flag + ":" + e.what());
    }
  };
  const auto us = parse_list("--u", u_text);
  const auto vs = parse_list("--v", v_text);
  if (!loopy) {
    const SetId z = arp_witness_simple(u, us, vs);
    const WitnessReport report = verify_simple_arp(u, us, vs, z);
    print_named(u, {z}, {"z"}, out);
    print_checks(report, out);
    return report_status(report, err);
  }
  const LoopyWitness w = arp_witness_loopy(u, us, vs);
  const WitnessReport report = verify_loopy_arp(u, us, vs, w);
  print_named(u, {w.z1, w.z2, w.x}, {"z1", "z2", "x"}, out);
  print_checks(report, out);
  return report_status(report, err);
}

int cmd_star(std::size_t n, std::size_t seed, std::ostream& out, std::ostream& err) {
  Universe u(universe_cap());
  const Star s = star(u, n, seed);
  const Slice slice = closure(u, {s.y});
  std::unordered_map<SetId, std::string> names{{s.y, "y"}};
  for (std::size_t i = 0; i < s.xs.size(); ++i) names.emplace(s.xs[i], "x_" + std::to_string(i));
  const LoopyGraph comp = double_edge_component(u, slice, s.y);
  out << write_graph(to_graph_text(comp, labels_for(u, comp.vertices, names), 2));
  const WitnessReport report = verify_star(u, s);
  print_checks(report, out);
  return report_status(report, err);
}

int cmd_component(const std::string& path, const std::string& format, std::size_t seed, std::ostream& out,
                  std::ostream& err) {
  const PatternGraph pattern = with_file(path, [&](const std::string& text) {
    return format == "matrix" ? read_pattern_matrix(text) : to_pattern(read_graph(text));
  });
  Universe u(universe_cap());
  const std::vector<SetId> ys = component(u, pattern, seed);
  std::unordered_map<SetId, std::string> names;
  for (std::size_t i = 0; i < ys.size(); ++i) names.emplace(ys[i], "y_" + std::to_string(i));
  const Slice slice = closure(u, ys);
  const LoopyGraph comp = double_edge_component(u, slice, ys.front());
  out << write_graph(to_graph_text(comp, labels_for(u, comp.vertices, names), 2));
  const WitnessReport report = verify_component(u, pattern, ys, seed);
  print_checks(report, out);
  return report_status(report, err);
}

int cmd_rado(std::size_t n, std::ostream& out, std::ostream& err) {
  Universe u(universe_cap());
  AckermannCodec codec(u);
  std::vector<SetId> sets;
  for (std::size_t i = 0; i < n; ++i) sets.push_back(codec.decode(Natural(i)));
  std::size_t pairs = 0, mismatches = 0, bad_codes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (codec.code(sets[i]) != Natural(i)) ++bad_codes;
    for (std::size_t j = i + 1; j < n; ++j) {
      ++pairs;
      if (joined(u, sets[i], sets[j]) != bit_adjacent(Natural(i), Natural(j))) ++mismatches;
    }
  }
  out << "codes " << n << "\npairs " << pairs << "\nmismatches " << mismatches << "\nbad_codes " << bad_codes
      << "\n";
  if (mismatches != 0 || bad_codes != 0) {
    err << "hfset: coding correspondence fails\n";
    return kCheckFailed;
  }
  out << "correspondence holds\n";
  return kOk;
}

using AnyOracle = std::variant<BitOracle, HereditarilyFiniteOracle, HypersetOracle>;

AnyOracle make_oracle(Universe& u, const std::string& name) {
  if (name == "bit") return BitOracle{};
  if (name == "hf") return HereditarilyFiniteOracle(u);
  if (name == "loopy") return HypersetOracle(u, 0);
  if (name.rfind("loopy:", 0) == 0) {
    const std::string digits = name.substr(6);
    char* end = nullptr;
    const unsigned long long seed = std::strtoull(digits.c_str(), &end, 10);
    if (!digits.empty() && *end == '\0') return HypersetOracle(u, seed);
  }
  throw FileError("unknown oracle '" + name + "' (expected bit, hf, loopy or loopy:SEED)");
}

std::string vertex_label(const Universe&, const Natural& n) { return n.to_string(); }

std::string vertex_label(const Universe& u, SetId s) {
  if (u.is_well_founded(s)) return ackermann_code(u, s).to_string();
  std::string text = serialize_set(u, s);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  for (char& c : text) {
    if (c == '\n') c = ';';
  }
  return "[" + text + "]";
}

int cmd_game(std::size_t rounds, const std::string& left_name, const std::string& right_name, std::ostream& out,
             std::ostream& err) {
  Universe u(universe_cap());
  AnyOracle left = make_oracle(u, left_name);
  AnyOracle right = make_oracle(u, right_name);
  return std::visit(
      [&](auto& l, auto& r) {
        const auto iso = back_and_forth(l, r, rounds);
        for (std::size_t i = 0; i < iso.size(); ++i) {
          out << "pair " << i << " " << vertex_label(u, iso.pairs[i].first) << " "
              << vertex_label(u, iso.pairs[i].second) << "\n";
        }
        const auto violations = partial_iso_violations(l, r, iso);
        out << "violations " << violations.size() << "\n";
        for (const auto& v : violations) err << "hfset: " << v << "\n";
        return violations.empty() ? kOk : kCheckFailed;
      },
      left, right);
}

int cmd_census(std::size_t max_n, std::ostream& out, std::ostream& err) {
  Universe u(universe_cap());
  std::map<std::size_t, std::size_t> histogram;
  bool ok = true;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Star s = star(u, n);
    const Slice slice = closure(u, {s.y});
    const std::size_t degree = double_degree(u, slice, s.y);
    const bool loop = has_loop(u, s.y);
    ok = ok && degree == n && !loop;
    ++histogram[degree];
    out << "star " << n << " double_degree " << degree << " loop " << (loop ? "yes" : "no") << "\n";
  }
  for (const auto& [degree, count] : histogram) out << "degree " << degree << " count " << count << "\n";
  out << "distinct " << histogram.size() << "\n";
  if (!ok) {
    err << "hfset: some star has the wrong double degree or a loop\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hereditarily finite hypersets and their membership graphs"};
  app.name("hfset");
  app.require_subcommand(1);

  std::string file, mode = "loopy", u_list, v_list, pattern_format = "graph", left = "bit", right = "hf";
  std::size_t number = 0, seed = 0, rounds = 10;
  bool simple = false, loopy = false;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a system file and print its normal form");
  solve_cmd->add_option("FILE", file, "System file, or - for standard input")->required();

  auto* undirect_cmd = app.add_subcommand("undirect", "Print the undirected membership graph of a solved system");
  undirect_cmd->add_option("FILE", file)->required();
  undirect_cmd->add_option("--mode", mode)->check(CLI::IsMember({"loopy", "multi", "double"}));

  auto* witness_cmd = app.add_subcommand("witness", "Construct and check extension witnesses for U and V");
  auto* simple_flag = witness_cmd->add_flag("--simple", simple, "Well-founded witness U with {V} added");
  auto* loopy_flag = witness_cmd->add_flag("--loopy", loopy, "Loopless and looped hyperset witnesses");
  simple_flag->excludes(loopy_flag);
  witness_cmd->add_option("--u", u_list, "Comma-separated set literals");
  witness_cmd->add_option("--v", v_list, "Comma-separated set literals");

  auto* star_cmd = app.add_subcommand("star", "Build a star and print its double-edge component");
  star_cmd->add_option("N", number)->required();
  star_cmd->add_option("--seed", seed, "First atom index");

  auto* component_cmd = app.add_subcommand("component", "Realize a pattern as a double-edge component");
  component_cmd->add_option("FILE", file)->required();
  component_cmd->add_option("--pattern-format", pattern_format)->check(CLI::IsMember({"graph", "matrix"}));
  component_cmd->add_option("--seed", seed, "First atom index");

  auto* rado_cmd = app.add_subcommand("rado", "Compare Ackermann-coded membership with BIT adjacency");
  rado_cmd->add_option("--check", number, "Check codes below N")->required();

  auto* game_cmd = app.add_subcommand("game", "Play a back-and-forth game between two graph oracles");
  game_cmd->add_option("--rounds", rounds);
  game_cmd->add_option("--left", left, "bit, hf, loopy or loopy:SEED");
  game_cmd->add_option("--right", right, "bit, hf, loopy or loopy:SEED");

  auto* census_cmd = app.add_subcommand("census", "Double-degree histogram of stars 0..N");
  census_cmd->add_option("--max-n", number)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, out);
    if (*undirect_cmd) return cmd_undirect(file, mode, out);
    if (*witness_cmd) {
      if (!simple && !loopy) {
        err << "hfset: witness needs --simple or --loopy\n";
        return kInputError;
      }
      return cmd_witness(loopy, u_list, v_list, out, err);
    }
    if (*star_cmd) return cmd_star(number, seed, out, err);
    if (*component_cmd) return cmd_component(file, pattern_format, seed, out, err);
    if (*rado_cmd) return cmd_rado(number, out, err);
    if (*game_cmd) return cmd_game(rounds, left, right, out, err);
    if (*census_cmd) return cmd_census(number, out, err);
  } catch (const FileError& e) {
    err << "hfset: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    err << "hfset: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "hfset: " << e.what() << "\n";
    return kLibraryError;
  }
  return kInputError;
}

}  // namespace hfset::cli
