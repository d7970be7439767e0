#include "hfset/universe.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hfset/bisimulation.hpp"
#include "hfset/errors.hpp"

namespace hfset {
namespace {

constexpr std::uint64_t kLeafSignature = 0x6a09e667f3bcc908ULL;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Hash of a *set* of child hashes: sorted and deduplicated first so that
// repeated or reordered children cannot change it.
std::uint64_t combine(std::vector<std::uint64_t>& hashes) {
  std::sort(hashes.begin(), hashes.end());
  hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());
  std::uint64_t h = kLeafSignature;
  for (std::uint64_t v : hashes) h = mix(h ^ v);
  return mix(h + hashes.size());
}

struct Components {
  std::vector<std::uint32_t> of;           // component per node
  std::vector<std::vector<std::size_t>> members;  // in completion order, sinks first
};

// Iterative Tarjan over the picture-internal edges.
Components strongly_connected(std::span<const PictureNode> nodes) {
  const std::size_t n = nodes.size();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  Components out;
  out.of.assign(n, kUnset);
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // node, next child
  std::uint32_t counter = 0;

  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    call.emplace_back(start, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto& kids = nodes[v].nodes;
      if (next < kids.size()) {
        const std::size_t w = kids[next++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.of[w] = static_cast<std::uint32_t>(out.members.size());
          comp.push_back(w);
        } while (w != v);
        out.members.push_back(std::move(comp));
      }
      const std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return out;
}

}  // namespace

std::size_t Universe::MembersHash::operator()(const std::vector<SetId>& members) const noexcept {
  std::uint64_t h = members.size();
  for (SetId m : members) h = mix(h ^ m.value());
  return static_cast<std::size_t>(h);
}

Universe::Universe(std::size_t capacity) : capacity_(capacity) {}

void Universe::check(SetId s) const {
  if (!contains(s)) {
    throw UnknownSetError(s.valid() ? "unknown set handle " + std::to_string(s.value())
                                    : "invalid set handle");
  }
}

void Universe::reserve_slot() const {
  if (elements_.size() >= capacity_) {
    throw CapacityError("universe capacity of " + std::to_string(capacity_) + " sets exhausted");
  }
}

Universe::Signature Universe::signature_of(std::span<const SetId> members) const {
  Signature sig{};
  sig[0] = kLeafSignature;
  std::vector<std::uint64_t> hashes;
  for (std::size_t k = 1; k <= kSignatureDepth; ++k) {
    hashes.clear();
    for (SetId m : members) hashes.push_back(signatures_[m.value()][k - 1]);
    sig[k] = combine(hashes);
  }
  return sig;
}

SetId Universe::append(std::vector<SetId> members, bool well_founded, const Signature& sig) {
  reserve_slot();
  const SetId id(static_cast<std::uint32_t>(elements_.size()));
  for (SetId m : members) containers_[m.value()].push_back(id);
  by_members_.emplace(members, id);
  elements_.push_back(std::move(members));
  containers_.emplace_back();
  well_founded_.push_back(well_founded ? 1 : 0);
  signatures_.push_back(sig);
  if (!well_founded) cyclic_by_signature_.emplace(sig[kSignatureDepth], id);
  return id;
}

SetId Universe::make_set(std::span<const SetId> members) {
  std::vector<SetId> sorted(members.begin(), members.end());
  for (SetId m : sorted) check(m);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // In a minimal store a set is determined by its element list.
  if (auto it = by_members_.find(sorted); it != by_members_.end()) return it->second;
  const bool wf = std::all_of(sorted.begin(), sorted.end(),
                              [&](SetId m) { return well_founded_[m.value()] != 0; });
  const Signature sig = signature_of(sorted);
  return append(std::move(sorted), wf, sig);
}

SetId Universe::union_of(std::span<const SetId> sets) {
  std::vector<SetId> members;
  for (SetId s : sets) {
    check(s);
    const auto& e = elements_[s.value()];
    members.insert(members.end(), e.begin(), e.end());
  }
  return make_set(members);
}

SetId Universe::vn(std::size_t n) {
  while (naturals_.size() <= n) {
    const SetId next = make_set(naturals_);
    naturals_.push_back(next);
  }
  return naturals_[n];
}

std::optional<SetId> Universe::find(std::span<const SetId> members) const {
  std::vector<SetId> sorted(members.begin(), members.end());
  for (SetId m : sorted) {
    if (!contains(m)) return std::nullopt;
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (auto it = by_members_.find(sorted); it != by_members_.end()) return it->second;
  return std::nullopt;
}

std::optional<SetId> Universe::find_natural(std::size_t n) const {
  if (n < naturals_.size()) return naturals_[n];
  std::optional<SetId> current =
      naturals_.empty() ? find(std::span<const SetId>{}) : std::optional<SetId>(naturals_.back());
  std::vector<SetId> members(naturals_.begin(), naturals_.end());
  if (!naturals_.empty()) members.pop_back();
  for (std::size_t k = naturals_.empty() ? 0 : naturals_.size() - 1; current && k < n; ++k) {
    members.push_back(*current);
    current = find(members);
  }
  return current;
}

std::span<const SetId> Universe::elements(SetId s) const {
  check(s);
  return elements_[s.value()];
}

std::span<const SetId> Universe::containers(SetId s) const {
  check(s);
  return containers_[s.value()];
}

bool Universe::is_member(SetId a, SetId b) const {
  check(a);
  check(b);
  const auto& e = elements_[b.value()];
  return std::binary_search(e.begin(), e.end(), a);
}

bool Universe::is_well_founded(SetId s) const {
  check(s);
  return well_founded_[s.value()] != 0;
}

const Universe::Signature& Universe::signature(SetId s) const {
  check(s);
  return signatures_[s.value()];
}

Apg Universe::picture(SetId s) const {
  check(s);
  Apg graph;
  std::unordered_map<SetId, std::size_t> index{{s, 0}};
  std::vector<SetId> order{s};
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<std::size_t> kids;
    for (SetId m : elements_[order[i].value()]) {
      auto [it, inserted] = index.emplace(m, order.size());
      if (inserted) order.push_back(m);
      kids.push_back(it->second);
    }
    graph.children.push_back(std::move(kids));
  }
  return graph;
}

SetId Universe::canonicalize(const Apg& graph) {
  check_structure(graph);
  std::vector<PictureNode> nodes(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) nodes[v].nodes = graph.children[v];
  return insert(nodes)[graph.root];
}

std::vector<SetId> Universe::insert(std::span<const PictureNode> nodes) {
  const std::size_t n = nodes.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c : nodes[v].nodes) {
      if (c >= n) {
        throw StructuralError("node " + std::to_string(v) + " has child " + std::to_string(c) +
                              " out of range");
      }
    }
    for (SetId s : nodes[v].sets) check(s);
  }

  std::vector<SetId> result(n);
  const Components comps = strongly_connected(nodes);

  // A node is cyclic when some picture cycle is reachable from it. The rest
  // are well-founded over the store and resolve bottom-up by hash-consing.
  std::vector<char> cyclic(n, 0);
  for (const auto& comp : comps.members) {
    bool reaches_cycle = comp.size() > 1;
    for (std::size_t v : comp) {
      for (std::size_t c : nodes[v].nodes) {
        if (c == v || cyclic[c]) reaches_cycle = true;
      }
    }
    if (reaches_cycle) {
      for (std::size_t v : comp) cyclic[v] = 1;
      continue;
    }
    const std::size_t v = comp.front();
    std::vector<SetId> members = nodes[v].sets;
    for (std::size_t c : nodes[v].nodes) members.push_back(result[c]);
    result[v] = make_set(members);
  }

  std::vector<std::size_t> open;
  std::vector<std::uint32_t> local(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (cyclic[v]) {
      local[v] = static_cast<std::uint32_t>(open.size());
      open.push_back(v);
    }
  }
  if (open.empty()) return result;

  // Signatures of the open nodes, level by level.
  std::vector<Signature> sig(open.size());
  std::vector<std::uint64_t> hashes;
  for (auto& s : sig) s[0] = kLeafSignature;
  for (std::size_t k = 1; k <= kSignatureDepth; ++k) {
    for (std::size_t i = 0; i < open.size(); ++i) {
      const PictureNode& node = nodes[open[i]];
      hashes.clear();
      for (std::size_t c : node.nodes) {
        hashes.push_back(cyclic[c] ? sig[local[c]][k - 1] : signatures_[result[c].value()][k - 1]);
      }
      for (SetId m : node.sets) hashes.push_back(signatures_[m.value()][k - 1]);
      sig[i][k] = combine(hashes);
    }
  }

  // Joint graph: open nodes first, then the part of the store that can
  // possibly be bisimilar to them, closed under elements.
  std::vector<std::vector<std::uint32_t>> succ(open.size());
  std::vector<SetId> stored;
  std::unordered_map<SetId, std::uint32_t> store_local;
  std::vector<SetId> frontier;
  auto visit = [&](SetId s) -> std::uint32_t {
    auto [it, inserted] =
        store_local.emplace(s, static_cast<std::uint32_t>(open.size() + stored.size()));
    if (inserted) {
      stored.push_back(s);
      frontier.push_back(s);
    }
    return it->second;
  };
  for (std::size_t i = 0; i < open.size(); ++i) {
    const PictureNode& node = nodes[open[i]];
    for (std::size_t c : node.nodes) succ[i].push_back(cyclic[c] ? local[c] : visit(result[c]));
    for (SetId m : node.sets) succ[i].push_back(visit(m));
    auto [lo, hi] = cyclic_by_signature_.equal_range(sig[i][kSignatureDepth]);
    for (auto it = lo; it != hi; ++it) visit(it->second);
  }
  while (!frontier.empty()) {
    const SetId s = frontier.back();
    frontier.pop_back();
    for (SetId m : elements_[s.value()]) visit(m);
  }
  succ.resize(open.size() + stored.size());
  for (std::size_t j = 0; j < stored.size(); ++j) {
    auto& kids = succ[open.size() + j];
    for (SetId m : elements_[stored[j].value()]) kids.push_back(store_local.at(m));
  }

  const std::vector<std::uint32_t> block = maximum_bisimulation(succ);
  std::uint32_t block_count = 0;
  for (std::uint32_t b : block) block_count = std::max(block_count, b + 1);

  std::vector<SetId> block_set(block_count);
  for (std::size_t j = 0; j < stored.size(); ++j) block_set[block[open.size() + j]] = stored[j];

  // Classes without a stored member become new sets, numbered in the order
  // their first open node appears.
  std::vector<std::size_t> fresh_rep;
  for (std::size_t i = 0; i < open.size(); ++i) {
    SetId& slot = block_set[block[i]];
    if (!slot.valid()) {
      if (elements_.size() + fresh_rep.size() >= capacity_) {
        throw CapacityError("universe capacity of " + std::to_string(capacity_) +
                            " sets exhausted");
      }
      slot = SetId(static_cast<std::uint32_t>(elements_.size() + fresh_rep.size()));
      fresh_rep.push_back(i);
    }
  }

  const std::size_t first_fresh = elements_.size();
  elements_.resize(first_fresh + fresh_rep.size());
  containers_.resize(first_fresh + fresh_rep.size());
  for (std::size_t f = 0; f < fresh_rep.size(); ++f) {
    std::vector<SetId> members;
    for (std::uint32_t c : succ[fresh_rep[f]]) members.push_back(block_set[block[c]]);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const SetId id(static_cast<std::uint32_t>(first_fresh + f));
    for (SetId m : members) containers_[m.value()].push_back(id);
    if (!by_members_.emplace(members, id).second) {
      throw std::logic_error("bisimulation collapse produced a duplicate element list");
    }
    elements_[id.value()] = std::move(members);
    well_founded_.push_back(0);
    signatures_.push_back(sig[fresh_rep[f]]);
    cyclic_by_signature_.emplace(sig[fresh_rep[f]][kSignatureDepth], id);
  }

  for (std::size_t i = 0; i < open.size(); ++i) result[open[i]] = block_set[block[i]];
  return result;
}

}  // namespace hfset
