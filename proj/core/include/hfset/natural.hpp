#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hfset {

/// Arbitrary natural number in hereditary binary form.
///
/// Values below 2^64 are held inline. Larger values are held as the sorted
/// set of their one-bit positions, each position again a Natural. This
/// keeps numbers such as 2^(2^(2^18)) representable: only the positions are
/// stored, never the digits.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value) : small_(value) {}  // NOLINT(google-explicit-constructor)

  /// Sum of 2^p over the given positions, taken as a set.
  static Natural from_bits(std::vector<Natural> positions);

  /// One-bit positions in increasing order.
  std::vector<Natural> bits() const;
  bool test_bit(const Natural& position) const;

  bool is_zero() const { return !large_ && small_ == 0; }
  bool fits_u64() const { return !large_; }
  std::optional<std::uint64_t> to_u64() const;

  Natural successor() const;

  /// Decimal below 2^64; otherwise a sum of powers of two, highest first,
  /// e.g. "2^(2^64)+2^3".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);
  friend bool operator==(const Natural& a, const Natural& b);

 private:
  std::uint64_t small_ = 0;
  std::shared_ptr<const std::vector<Natural>> large_;  // set iff value >= 2^64
};

}  // namespace hfset
