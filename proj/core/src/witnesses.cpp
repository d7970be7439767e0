#include "hfset/witnesses.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hfset/errors.hpp"
#include "hfset/flat_system.hpp"
#include "hfset/membership_graph.hpp"

namespace hfset {
namespace {

std::vector<SetId> distinct(std::span<const SetId> sets) {
  std::vector<SetId> out(sets.begin(), sets.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_disjoint(const std::vector<SetId>& u, const std::vector<SetId>& v) {
  for (SetId s : u) {
    if (std::binary_search(v.begin(), v.end(), s)) {
      throw PreconditionError("U and V must be disjoint; both contain set " + std::to_string(s.value()));
    }
  }
}

bool joined_to_all(const Universe& universe, SetId z, const std::vector<SetId>& sets) {
  return std::all_of(sets.begin(), sets.end(), [&](SetId s) { return joined(universe, z, s); });
}

bool joined_to_none(const Universe& universe, SetId z, const std::vector<SetId>& sets) {
  return std::none_of(sets.begin(), sets.end(), [&](SetId s) { return joined(universe, z, s); });
}

bool has_elements(const Universe& universe, SetId s, std::vector<SetId> expected) {
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  auto actual = universe.elements(s);
  return std::equal(actual.begin(), actual.end(), expected.begin(), expected.end());
}

bool pairwise_distinct(std::span<const SetId> sets) { return distinct(sets).size() == sets.size(); }

}  // namespace

bool WitnessReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::optional<std::string> WitnessReport::first_failure() const {
  for (const auto& [name, holds] : checks) {
    if (!holds) return name;
  }
  return std::nullopt;
}

bool joined(const Universe& universe, SetId a, SetId b) {
  return universe.is_member(a, b) || universe.is_member(b, a);
}

SetId arp_witness_simple(Universe& universe, std::span<const SetId> u, std::span<const SetId> v) {
  const auto us = distinct(u);
  const auto vs = distinct(v);
  require_disjoint(us, vs);
  for (const auto* side : {&us, &vs}) {
    for (SetId s : *side) {
      if (!universe.is_well_founded(s)) {
        throw PreconditionError("set " + std::to_string(s.value()) +
                                " is not well-founded; U ∪ {V} need not be a witness");
      }
    }
  }
  std::vector<SetId> members = us;
  members.push_back(universe.make_set(vs));
  return universe.make_set(members);
}

WitnessReport verify_simple_arp(const Universe& universe, std::span<const SetId> u,
                                std::span<const SetId> v, SetId z) {
  const auto us = distinct(u);
  const auto vs = distinct(v);
  WitnessReport report;
  report.witnesses = {z};
  std::vector<SetId> expected = us;
  if (auto vset = universe.find(vs)) {
    expected.push_back(*vset);
    report.add("z_is_U_plus_V", has_elements(universe, z, expected));
  } else {
    report.add("z_is_U_plus_V", false);
  }
  report.add("z_joined_to_U", joined_to_all(universe, z, us));
  report.add("z_avoids_V", joined_to_none(universe, z, vs));
  report.add("z_loopless", !universe.is_member(z, z));
  report.add("z_outside_U_and_V", !std::binary_search(us.begin(), us.end(), z) &&
                                      !std::binary_search(vs.begin(), vs.end(), z));
  return report;
}

LoopyWitness arp_witness_loopy(Universe& universe, std::span<const SetId> u, std::span<const SetId> v) {
  const auto us = distinct(u);
  const auto vs = distinct(v);
  require_disjoint(us, vs);

  std::unordered_set<SetId> forbidden(us.begin(), us.end());
  forbidden.insert(vs.begin(), vs.end());
  for (SetId s : us) {
    for (SetId m : universe.elements(s)) forbidden.insert(m);
  }
  for (SetId s : vs) {
    for (SetId m : universe.elements(s)) {
      forbidden.insert(m);
      for (SetId mm : universe.elements(m)) forbidden.insert(mm);
    }
  }

  const std::size_t size = us.size() + 3;
  SetId x;
  std::vector<SetId> block;
  for (std::size_t start = 0;; ++start) {
    block.clear();
    for (std::size_t i = 0; i < size; ++i) block.push_back(universe.vn(start + i));
    const auto existing = universe.find(block);
    if (!existing || forbidden.count(*existing) == 0) {
      x = existing ? *existing : universe.make_set(block);
      break;
    }
  }

  std::vector<SetId> z1_members = us;
  z1_members.push_back(x);
  const SetId z1 = universe.make_set(z1_members);

  FlatSystem system;
  Equation eq{"z", {"z", "x"}};
  system.atoms.push_back({"x", x});
  for (std::size_t i = 0; i < us.size(); ++i) {
    const std::string name = "u" + std::to_string(i);
    system.atoms.push_back({name, us[i]});
    eq.members.push_back(name);
  }
  system.equations.push_back(std::move(eq));
  const SetId z2 = solve(universe, system).at("z");
  return LoopyWitness{z1, z2, x};
}

WitnessReport verify_loopy_arp(const Universe& universe, std::span<const SetId> u,
                               std::span<const SetId> v, const LoopyWitness& w) {
  const auto us = distinct(u);
  const auto vs = distinct(v);
  WitnessReport report;
  report.witnesses = {w.z1, w.z2, w.x};

  const bool x_outside_v = !std::binary_search(vs.begin(), vs.end(), w.x);
  bool x_not_member = true;
  bool x_not_member_of_members = true;
  for (SetId s : us) x_not_member = x_not_member && !universe.is_member(w.x, s);
  for (SetId s : vs) {
    x_not_member = x_not_member && !universe.is_member(w.x, s);
    for (SetId m : universe.elements(s)) {
      x_not_member_of_members = x_not_member_of_members && !universe.is_member(w.x, m);
    }
  }
  report.add("x_not_in_V", x_outside_v);
  report.add("x_not_member_of_U_or_V", x_not_member);
  report.add("x_not_member_of_members_of_V", x_not_member_of_members);
  report.add("x_cardinality", universe.elements(w.x).size() == us.size() + 3);

  std::vector<SetId> z1_expected = us;
  z1_expected.push_back(w.x);
  std::vector<SetId> z2_expected = z1_expected;
  z2_expected.push_back(w.z2);
  report.add("z1_elements", has_elements(universe, w.z1, z1_expected));
  report.add("z2_elements", has_elements(universe, w.z2, z2_expected));
  report.add("z1_loopless", !universe.is_member(w.z1, w.z1));
  report.add("z2_looped", universe.is_member(w.z2, w.z2));
  report.add("z1_joined_to_U", joined_to_all(universe, w.z1, us));
  report.add("z2_joined_to_U", joined_to_all(universe, w.z2, us));
  report.add("z1_avoids_V", joined_to_none(universe, w.z1, vs));
  report.add("z2_avoids_V", joined_to_none(universe, w.z2, vs));
  report.add("z1_ne_z2", w.z1 != w.z2);
  report.add("z1_ne_x", w.z1 != w.x);
  report.add("z2_ne_x", w.z2 != w.x);
  return report;
}

Star star(Universe& universe, std::size_t n, std::size_t atom_seed) {
  FlatSystem system;
  Equation hub{"y", {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::string x = "x" + std::to_string(i);
    const std::string a = "a" + std::to_string(i);
    system.atoms.push_back({a, universe.vn(atom_seed + i)});
    system.equations.push_back({x, {"y", a}});
    hub.members.push_back(x);
  }
  system.equations.push_back(std::move(hub));
  const Solution solution = solve(universe, system);

  Star out{solution.at("y"), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    out.xs.push_back(solution.at("x" + std::to_string(i)));
    out.atoms.push_back(solution.at("a" + std::to_string(i)));
  }
  return out;
}

WitnessReport verify_star(const Universe& universe, const Star& s) {
  WitnessReport report;
  report.witnesses = {s.y};
  report.witnesses.insert(report.witnesses.end(), s.xs.begin(), s.xs.end());
  const Slice slice = closure(universe, {s.y});
  report.add("double_degree", double_degree(universe, slice, s.y) == s.xs.size());
  report.add("y_loopless", !has_loop(universe, s.y));
  report.add("xs_distinct", pairwise_distinct(s.xs));
  bool equations = has_elements(universe, s.y, s.xs) && s.atoms.size() == s.xs.size();
  for (std::size_t i = 0; equations && i < s.xs.size(); ++i) {
    equations = has_elements(universe, s.xs[i], {s.y, s.atoms[i]});
  }
  report.add("equations_hold", equations);
  const LoopyGraph comp = double_edge_component(universe, slice, s.y);
  std::vector<SetId> expected = s.xs;
  expected.push_back(s.y);
  report.add("component_is_star", distinct(comp.vertices) == distinct(expected) &&
                                      comp.edges.size() == s.xs.size());
  return report;
}

std::vector<SetId> component(Universe& universe, const PatternGraph& pattern, std::size_t atom_seed) {
  if (!pattern.connected()) throw PreconditionError("pattern graph must be non-empty and connected");
  const std::size_t k = pattern.order();
  FlatSystem system;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string a = "a" + std::to_string(i);
    system.atoms.push_back({a, universe.vn(atom_seed + i)});
    Equation eq{"y" + std::to_string(i), {a}};
    for (std::size_t j = 0; j < k; ++j) {
      if (pattern.adjacent(i, j)) eq.members.push_back("y" + std::to_string(j));
    }
    system.equations.push_back(std::move(eq));
  }
  const Solution solution = solve(universe, system);
  std::vector<SetId> ys;
  for (std::size_t i = 0; i < k; ++i) ys.push_back(solution.at("y" + std::to_string(i)));
  return ys;
}

WitnessReport verify_component(const Universe& universe, const PatternGraph& pattern,
                               std::span<const SetId> ys, std::size_t atom_seed) {
  WitnessReport report;
  report.witnesses.assign(ys.begin(), ys.end());
  const std::size_t k = pattern.order();
  if (ys.size() != k || k == 0) {
    report.add("one_set_per_vertex", false);
    return report;
  }
  report.add("ys_distinct", pairwise_distinct(ys));

  bool equations = true;
  for (std::size_t i = 0; i < k && equations; ++i) {
    std::vector<SetId> expected;
    const std::optional<SetId> natural = universe.find_natural(atom_seed + i);
    if (!natural) {
      equations = false;
      break;
    }
    expected.push_back(*natural);
    for (std::size_t j = 0; j < k; ++j) {
      if (pattern.adjacent(i, j)) expected.push_back(ys[j]);
    }
    equations = has_elements(universe, ys[i], expected);
  }
  report.add("equations_hold", equations);

  const Slice slice = closure(universe, ys);
  const LoopyGraph comp = double_edge_component(universe, slice, ys[0]);
  report.add("component_vertices", distinct(comp.vertices) == distinct(ys));

  bool degrees = true;
  for (std::size_t i = 0; i < k; ++i) {
    degrees = degrees && double_degree(universe, slice, ys[i]) == pattern.degree(i) &&
              has_loop(universe, ys[i]) == pattern.has_loop(i);
  }
  report.add("no_extra_double_edges", degrees);

  std::vector<std::size_t> identity(k);
  bool mapped = comp.vertices.size() == k;
  for (std::size_t i = 0; i < k && mapped; ++i) {
    auto it = std::find(comp.vertices.begin(), comp.vertices.end(), ys[i]);
    mapped = it != comp.vertices.end();
    if (mapped) identity[i] = static_cast<std::size_t>(it - comp.vertices.begin());
  }
  const PatternGraph found = to_pattern(comp);
  report.add("y_i_map_is_isomorphism", mapped && is_isomorphism(pattern, found, identity));
  report.add("loopy_iso_found", k <= kMaxIsoOrder && loopy_iso(pattern, found).has_value());
  return report;
}

}  // namespace hfset
