#include "hfset/flat_system.hpp"

#include <unordered_map>
#include <unordered_set>

#include "hfset/errors.hpp"

namespace hfset {

std::vector<Violation> validate(const FlatSystem& system, const Universe* universe) {
  std::vector<Violation> out;
  std::unordered_set<std::string> atoms;
  std::unordered_set<std::string> indeterminates;
  for (const Atom& a : system.atoms) {
    if (!atoms.insert(a.name).second) out.push_back({a.name, "atom '" + a.name + "' declared twice"});
    if (universe != nullptr && !universe->contains(a.value)) {
      out.push_back({a.name, "atom '" + a.name + "' is bound to an unknown set"});
    }
  }
  for (const Equation& eq : system.equations) {
    if (!indeterminates.insert(eq.name).second) {
      out.push_back({eq.name, "duplicate equation for '" + eq.name + "'"});
    }
    if (atoms.count(eq.name) != 0) {
      out.push_back({eq.name, "'" + eq.name + "' is both an atom and an indeterminate"});
    }
  }
  for (const Equation& eq : system.equations) {
    for (const std::string& m : eq.members) {
      if (indeterminates.count(m) == 0 && atoms.count(m) == 0) {
        out.push_back({eq.name, "equation '" + eq.name + "' mentions undeclared name '" + m + "'"});
      }
    }
  }
  return out;
}

Solution solve(Universe& universe, const FlatSystem& system) {
  if (auto violations = validate(system, &universe); !violations.empty()) {
    throw ValidationError(violations.front().message);
  }

  std::unordered_map<std::string, SetId> atom_value;
  for (const Atom& a : system.atoms) atom_value.emplace(a.name, a.value);
  std::unordered_map<std::string, std::size_t> node_of;
  for (std::size_t i = 0; i < system.equations.size(); ++i) node_of.emplace(system.equations[i].name, i);

  std::vector<PictureNode> nodes(system.equations.size());
  for (std::size_t i = 0; i < system.equations.size(); ++i) {
    for (const std::string& m : system.equations[i].members) {
      if (auto it = node_of.find(m); it != node_of.end()) {
        nodes[i].nodes.push_back(it->second);
      } else {
        nodes[i].sets.push_back(atom_value.at(m));
      }
    }
  }

  const std::vector<SetId> ids = universe.insert(nodes);
  Solution solution;
  for (const Atom& a : system.atoms) solution.emplace(a.name, a.value);
  for (std::size_t i = 0; i < ids.size(); ++i) solution.emplace(system.equations[i].name, ids[i]);
  return solution;
}

}  // namespace hfset
