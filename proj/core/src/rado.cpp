#include "hfset/rado.hpp"

#include <algorithm>
#include <string>

#include "hfset/errors.hpp"

namespace hfset {
Natural ackermann_code(const Universe& universe, SetId s, std::unordered_map<SetId, Natural>& memo) {
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  if (!universe.is_well_founded(s)) {
    throw DomainError("set " + std::to_string(s.value()) +
                      " is not well-founded and has no Ackermann code");
  }
  std::vector<Natural> positions;
  for (SetId m : universe.elements(s)) positions.push_back(ackermann_code(universe, m, memo));
  Natural code = Natural::from_bits(std::move(positions));
  memo.emplace(s, code);
  return code;
}

bool bit_adjacent(const Natural& a, const Natural& b) {
  if (a < b) return b.test_bit(a);
  if (b < a) return a.test_bit(b);
  return false;
}

Natural bit_witness(std::span<const Natural> u, std::span<const Natural> v) {
  for (const Natural& x : u) {
    if (std::find(v.begin(), v.end(), x) != v.end()) {
      throw PreconditionError("U and V must be disjoint; both contain " + x.to_string());
    }
  }
  Natural top;
  bool any = false;
  for (const auto side : {u, v}) {
    for (const Natural& x : side) {
      if (!any || top < x) top = x;
      any = true;
    }
  }
  std::vector<Natural> positions(u.begin(), u.end());
  positions.push_back(any ? top.successor() : Natural(0));
  return Natural::from_bits(std::move(positions));
}

const Natural& AckermannCodec::code(SetId s) {
  if (auto it = codes_.find(s); it != codes_.end()) return it->second;
  ackermann_code(universe_, s, codes_);
  return codes_.at(s);
}

SetId AckermannCodec::decode(const Natural& n) {
  if (auto it = sets_.find(n); it != sets_.end()) return it->second;
  std::vector<SetId> members;
  for (const Natural& p : n.bits()) members.push_back(decode(p));
  const SetId s = universe_.make_set(members);
  sets_.emplace(n, s);
  return s;
}

Natural ackermann_code(const Universe& universe, SetId s) {
  std::unordered_map<SetId, Natural> memo;
  return ackermann_code(universe, s, memo);
}

SetId ackermann_decode(Universe& universe, const Natural& n) {
  std::vector<SetId> members;
  for (const Natural& p : n.bits()) members.push_back(ackermann_decode(universe, p));
  return universe.make_set(members);
}

}  // namespace hfset
