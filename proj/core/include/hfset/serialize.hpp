#pragma once

#include <span>
#include <string>
#include <vector>

#include "hfset/flat_system.hpp"
#include "hfset/set_id.hpp"
#include "hfset/universe.hpp"

namespace hfset {

/// Nested-brace literal of a well-founded set, members ordered by Ackermann
/// code: vn(2) prints as {{},{{}}}. Throws DomainError otherwise.
std::string serialize_literal(const Universe& universe, SetId s);

/// Normal-form system for `roots`, one line per name, fresh names ν0, ν1, ...
///
/// Names go to the roots and everything they reach breadth-first, children
/// taken well-founded first by Ackermann code, then non-well-founded by a
/// colour computed from the shape of the picture alone. Roots and
/// non-well-founded sets get equations; other well-founded sets become atom
/// lines. The text does not depend on handle numbering, and feeding it back
/// through parse_system and solve (equations in order as roots) reproduces
/// it byte for byte.
std::string serialize_system(const Universe& universe, std::span<const SetId> roots);

/// serialize_system plus the ν index given to each root, parallel to `roots`.
struct NormalForm {
  std::string text;
  std::vector<std::size_t> root_names;
};
NormalForm normal_form(const Universe& universe, std::span<const SetId> roots);

/// serialize_literal for well-founded sets, otherwise the one-root normal form.
std::string serialize_set(const Universe& universe, SetId s);

/// Source text for a flat system: atom lines with literal values, then the
/// equations as written. Atoms must be well-founded.
std::string print_system(const Universe& universe, const FlatSystem& system);

}  // namespace hfset
