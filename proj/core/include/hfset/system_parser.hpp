#pragma once

#include <string_view>
#include <vector>

#include "hfset/flat_system.hpp"
#include "hfset/set_id.hpp"
#include "hfset/universe.hpp"

namespace hfset {

/// Parses the system file format:
///
///   # comment to end of line
///   atom a = {0, {1}}      naturals abbreviate von Neumann numerals
///   x = {y, a}
///
/// Names match [a-zA-Z_][a-zA-Z0-9_]*, optionally led by the letter ν so
/// that serialized normal forms parse back. `atom` is reserved. Whitespace
/// (newlines included) only separates tokens. Atom values are built in
/// `universe`. The result always passes validate(); every failure is a
/// ParseError carrying the 1-based line and column of the offending token.
FlatSystem parse_system(Universe& universe, std::string_view text);

/// A single set literal: a natural or a braced, comma-separated list of
/// literals.
SetId parse_set_literal(Universe& universe, std::string_view text);

/// Comma-separated set literals, possibly none.
std::vector<SetId> parse_set_list(Universe& universe, std::string_view text);

}  // namespace hfset
