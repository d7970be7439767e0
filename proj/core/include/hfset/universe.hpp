#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hfset/apg.hpp"
#include "hfset/set_id.hpp"

namespace hfset {

/// One node of a picture handed to Universe::insert. Children are either
/// other nodes of the same picture or sets already in the store.
struct PictureNode {
  std::vector<std::size_t> nodes;
  std::vector<SetId> sets;
};

/// Hash-consed, bisimulation-collapsed store of hereditarily finite hypersets.
///
/// The store is append-only and kept minimal: no two handles denote
/// bisimilar pictures, so handle equality is set equality. Element lists are
/// sorted by handle (creation) order.
///
/// Mutation is single-writer. The const interface is safe to call from
/// several threads once no writer is active.
class Universe {
 public:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  explicit Universe(std::size_t capacity = kUnbounded);

  /// Handle of the set pictured by the graph's root.
  SetId canonicalize(const Apg& graph);

  /// Solves every node of an arbitrary (not necessarily accessible) picture
  /// at once. Returns one handle per node.
  std::vector<SetId> insert(std::span<const PictureNode> nodes);

  SetId make_set(std::span<const SetId> members);
  SetId make_set(std::initializer_list<SetId> members) {
    return make_set(std::span<const SetId>(members.begin(), members.size()));
  }
  SetId union_of(std::span<const SetId> sets);
  SetId union_of(std::initializer_list<SetId> sets) {
    return union_of(std::span<const SetId>(sets.begin(), sets.size()));
  }

  /// von Neumann natural n.
  SetId vn(std::size_t n);
  SetId empty() { return make_set(std::span<const SetId>{}); }
  /// vn(n) if it is already in the store. Never inserts.
  std::optional<SetId> find_natural(std::size_t n) const;

  /// Existing handle with exactly these members, if any. Never inserts.
  std::optional<SetId> find(std::span<const SetId> members) const;

  std::span<const SetId> elements(SetId s) const;
  /// Sets that contain s, in insertion order of the containing sets.
  std::span<const SetId> containers(SetId s) const;
  bool is_member(SetId a, SetId b) const;
  bool is_well_founded(SetId s) const;

  /// Picture of s: the sets reachable from it, root first, breadth-first.
  Apg picture(SetId s) const;

  bool contains(SetId s) const { return s.valid() && s.value() < elements_.size(); }
  std::size_t size() const { return elements_.size(); }
  std::size_t capacity() const { return capacity_; }

  /// Depth-limited structural signature. Bisimilar pictures always share
  /// it; it is used to shortlist candidates before exact refinement.
  static constexpr std::size_t kSignatureDepth = 12;
  using Signature = std::array<std::uint64_t, kSignatureDepth + 1>;
  const Signature& signature(SetId s) const;

 private:
  struct MembersHash {
    std::size_t operator()(const std::vector<SetId>& members) const noexcept;
  };

  void check(SetId s) const;
  void reserve_slot() const;
  SetId append(std::vector<SetId> members, bool well_founded, const Signature& sig);
  Signature signature_of(std::span<const SetId> members) const;

  std::size_t capacity_;
  std::vector<std::vector<SetId>> elements_;
  std::vector<std::vector<SetId>> containers_;
  std::vector<char> well_founded_;
  std::vector<Signature> signatures_;
  std::unordered_map<std::vector<SetId>, SetId, MembersHash> by_members_;
  std::unordered_multimap<std::uint64_t, SetId> cyclic_by_signature_;
  std::vector<SetId> naturals_;
};

}  // namespace hfset
