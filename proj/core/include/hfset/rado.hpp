#pragma once

#include <map>
#include <span>
#include <unordered_map>

#include "hfset/natural.hpp"
#include "hfset/set_id.hpp"
#include "hfset/universe.hpp"

namespace hfset {

/// Rado's graph on the naturals: for a < b, a ~ b iff bit a of b is set.
/// Symmetric and irreflexive.
bool bit_adjacent(const Natural& a, const Natural& b);

/// z = sum of 2^u over U, plus 2^m for the least m above every member of
/// U ∪ V. z is joined to all of U, none of V, and is larger than all of
/// them. Throws PreconditionError when U and V meet.
Natural bit_witness(std::span<const Natural> u, std::span<const Natural> v);

/// Ackermann coding between well-founded hereditarily finite sets and the
/// naturals: code(x) = sum of 2^code(y) over y ∈ x.
class AckermannCodec {
 public:
  explicit AckermannCodec(Universe& universe) : universe_(universe) {}

  /// Throws DomainError for a non-well-founded set.
  const Natural& code(SetId s);
  SetId decode(const Natural& n);

 private:
  Universe& universe_;
  std::unordered_map<SetId, Natural> codes_;
  std::map<Natural, SetId> sets_;
};

Natural ackermann_code(const Universe& universe, SetId s);
/// Same, sharing `memo` across calls.
Natural ackermann_code(const Universe& universe, SetId s, std::unordered_map<SetId, Natural>& memo);
SetId ackermann_decode(Universe& universe, const Natural& n);

}  // namespace hfset
