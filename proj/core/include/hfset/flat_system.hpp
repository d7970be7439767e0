#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfset/set_id.hpp"
#include "hfset/universe.hpp"

namespace hfset {

struct Atom {
  std::string name;
  SetId value;
};

/// x = { members... }, each member naming an indeterminate or an atom.
struct Equation {
  std::string name;
  std::vector<std::string> members;
};

/// Flat system of equations over indeterminates (the equation names) and
/// atoms (names bound to existing sets).
struct FlatSystem {
  std::vector<Atom> atoms;
  std::vector<Equation> equations;
};

struct Violation {
  std::string equation;
  std::string message;
};

/// Lists every broken invariant: duplicate equations or atoms, names used
/// both as atom and indeterminate, undeclared member names, and (when a
/// universe is given) atom handles it does not know.
std::vector<Violation> validate(const FlatSystem& system, const Universe* universe = nullptr);

using Solution = std::map<std::string, SetId>;

/// Unique solution of the system: the bisimulation collapse of its picture.
/// Atoms map to their own handles. Throws ValidationError on a malformed
/// system, naming the first violation.
Solution solve(Universe& universe, const FlatSystem& system);

}  // namespace hfset
