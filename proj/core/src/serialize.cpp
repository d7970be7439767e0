#include "hfset/serialize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "hfset/errors.hpp"
#include "hfset/rado.hpp"

namespace hfset {
namespace {

using CodeMemo = std::unordered_map<SetId, Natural>;

void write_literal(const Universe& universe, SetId s, CodeMemo& codes, std::string& out) {
  std::vector<std::pair<Natural, SetId>> members;
  for (SetId m : universe.elements(s)) members.emplace_back(ackermann_code(universe, m, codes), m);
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out += '{';
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != 0) out += ',';
    write_literal(universe, members[i].second, codes, out);
  }
  out += '}';
}

// Colour refinement over the picture: well-founded sets are ranked by code
// and stay fixed; the rest start in one class above them and are split by
// (own colour, set of child colours) until stable. In a minimal store the
// stable colouring separates every pair of distinct sets, and it never
// consults handle values.
std::unordered_map<SetId, std::size_t> canonical_colours(const Universe& universe,
                                                         const std::vector<SetId>& nodes,
                                                         CodeMemo& codes) {
  std::vector<std::pair<Natural, SetId>> founded;
  std::vector<SetId> cyclic;
  for (SetId s : nodes) {
    if (universe.is_well_founded(s)) {
      founded.emplace_back(ackermann_code(universe, s, codes), s);
    } else {
      cyclic.push_back(s);
    }
  }
  std::sort(founded.begin(), founded.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::unordered_map<SetId, std::size_t> colour;
  for (std::size_t i = 0; i < founded.size(); ++i) colour[founded[i].second] = i;
  const std::size_t base = founded.size();
  for (SetId s : cyclic) colour[s] = base;

  std::size_t classes = cyclic.empty() ? 0 : 1;
  for (;;) {
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Key> keys(cyclic.size());
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      keys[i].first = colour[cyclic[i]];
      for (SetId m : universe.elements(cyclic[i])) keys[i].second.push_back(colour.at(m));
      std::sort(keys[i].second.begin(), keys[i].second.end());
      keys[i].second.erase(std::unique(keys[i].second.begin(), keys[i].second.end()), keys[i].second.end());
    }
    std::vector<Key> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      colour[cyclic[i]] = base + static_cast<std::size_t>(
                                     std::lower_bound(distinct.begin(), distinct.end(), keys[i]) -
                                     distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

}  // namespace

std::string serialize_literal(const Universe& universe, SetId s) {
  if (!universe.is_well_founded(s)) {
    throw DomainError("set " + std::to_string(s.value()) + " is not well-founded and has no literal");
  }
  CodeMemo codes;
  std::string out;
  write_literal(universe, s, codes, out);
  return out;
}

std::string serialize_system(const Universe& universe, std::span<const SetId> roots) {
  return normal_form(universe, roots).text;
}

NormalForm normal_form(const Universe& universe, std::span<const SetId> roots) {
  for (SetId r : roots) {
    if (!universe.contains(r)) throw UnknownSetError("unknown set " + std::to_string(r.value()));
  }
  const std::unordered_set<SetId> root_set(roots.begin(), roots.end());
  auto expanded = [&](SetId s) { return root_set.count(s) != 0 || !universe.is_well_founded(s); };

  // Every set that will receive a name: the roots, and the members of any
  // expanded set.
  std::vector<SetId> nodes;
  std::unordered_set<SetId> seen;
  std::vector<SetId> stack;
  for (SetId r : roots) {
    if (seen.insert(r).second) stack.push_back(r);
  }
  while (!stack.empty()) {
    const SetId s = stack.back();
    stack.pop_back();
    nodes.push_back(s);
    if (!expanded(s)) continue;
    for (SetId m : universe.elements(s)) {
      if (seen.insert(m).second) stack.push_back(m);
    }
  }

  CodeMemo codes;
  const auto colour = canonical_colours(universe, nodes, codes);

  std::unordered_map<SetId, std::size_t> name;
  std::vector<SetId> order;
  auto assign = [&](SetId s) {
    if (name.count(s) != 0) return false;
    name.emplace(s, order.size());
    order.push_back(s);
    return true;
  };
  for (SetId r : roots) {
    if (!assign(r)) continue;
    std::deque<SetId> queue{r};
    while (!queue.empty()) {
      const SetId s = queue.front();
      queue.pop_front();
      std::vector<SetId> kids(universe.elements(s).begin(), universe.elements(s).end());
      std::sort(kids.begin(), kids.end(), [&](SetId a, SetId b) { return colour.at(a) < colour.at(b); });
      for (SetId k : kids) {
        if (assign(k) && expanded(k)) queue.push_back(k);
      }
    }
  }

  NormalForm nf;
  for (SetId r : roots) nf.root_names.push_back(name.at(r));
  std::string& out = nf.text;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const SetId s = order[i];
    if (!expanded(s)) {
      out += "atom \xCE\xBD" + std::to_string(i) + " = ";
      write_literal(universe, s, codes, out);
      out += '\n';
      continue;
    }
    std::vector<std::size_t> members;
    for (SetId m : universe.elements(s)) members.push_back(name.at(m));
    std::sort(members.begin(), members.end());
    out += "\xCE\xBD" + std::to_string(i) + " = {";
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j != 0) out += ',';
      out += "\xCE\xBD" + std::to_string(members[j]);
    }
    out += "}\n";
  }
  return nf;
}

std::string serialize_set(const Universe& universe, SetId s) {
  if (universe.is_well_founded(s)) return serialize_literal(universe, s);
  return serialize_system(universe, std::span<const SetId>(&s, 1));
}

std::string print_system(const Universe& universe, const FlatSystem& system) {
  std::string out;
  for (const Atom& a : system.atoms) out += "atom " + a.name + " = " + serialize_literal(universe, a.value) + "\n";
  for (const Equation& eq : system.equations) {
    out += eq.name + " = {";
    for (std::size_t j = 0; j < eq.members.size(); ++j) {
      if (j != 0) out += ", ";
      out += eq.members[j];
    }
    out += "}\n";
  }
  return out;
}

}  // namespace hfset
