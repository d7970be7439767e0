#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace hfset {

/// Handle to a canonical hyperset stored in a Universe.
///
/// Handles are only meaningful relative to the Universe that issued them.
/// Within one Universe, two handles compare equal exactly when they denote
/// extensionally equal sets. Ordering follows creation order.
class SetId {
 public:
  static constexpr std::uint32_t kInvalid = std::numeric_limits<std::uint32_t>::max();

  constexpr SetId() = default;
  constexpr explicit SetId(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool valid() const { return value_ != kInvalid; }

  friend constexpr auto operator<=>(SetId, SetId) = default;

 private:
  std::uint32_t value_ = kInvalid;
};

}  // namespace hfset

template <>
struct std::hash<hfset::SetId> {
  std::size_t operator()(hfset::SetId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};
