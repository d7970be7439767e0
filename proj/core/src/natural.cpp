#include "hfset/natural.hpp"

#include <algorithm>
#include <bit>

namespace hfset {

Natural Natural::from_bits(std::vector<Natural> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  if (positions.empty()) return Natural();
  if (positions.back() < Natural(64)) {
    std::uint64_t value = 0;
    for (const Natural& p : positions) value |= std::uint64_t{1} << p.small_;
    return Natural(value);
  }
  Natural out;
  out.large_ = std::make_shared<const std::vector<Natural>>(std::move(positions));
  return out;
}

std::vector<Natural> Natural::bits() const {
  if (large_) return *large_;
  std::vector<Natural> out;
  for (std::uint64_t rest = small_; rest != 0; rest &= rest - 1) {
    out.emplace_back(static_cast<std::uint64_t>(std::countr_zero(rest)));
  }
  return out;
}

bool Natural::test_bit(const Natural& position) const {
  if (large_) return std::binary_search(large_->begin(), large_->end(), position);
  if (position.large_ || position.small_ >= 64) return false;
  return ((small_ >> position.small_) & 1) != 0;
}

std::optional<std::uint64_t> Natural::to_u64() const {
  if (large_) return std::nullopt;
  return small_;
}

Natural Natural::successor() const {
  if (!large_) {
    if (small_ != UINT64_MAX) return Natural(small_ + 1);
    return from_bits({Natural(64)});
  }
  // Clear the run of trailing ones and set the bit just above it.
  const auto& positions = *large_;
  std::size_t run = 0;
  while (run < positions.size() && positions[run] == Natural(run)) ++run;
  std::vector<Natural> next{Natural(run)};
  next.insert(next.end(), positions.begin() + static_cast<std::ptrdiff_t>(run), positions.end());
  return from_bits(std::move(next));
}

std::string Natural::to_string() const {
  if (!large_) return std::to_string(small_);
  std::string out;
  for (auto it = large_->rbegin(); it != large_->rend(); ++it) {
    if (!out.empty()) out += '+';
    if (it->is_zero()) {
      out += '1';
      continue;
    }
    const std::string exponent = it->to_string();
    const bool bare = exponent.find_first_not_of("0123456789") == std::string::npos;
    out += bare ? "2^" + exponent : "2^(" + exponent + ")";
  }
  return out;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
  if (!a.large_ && !b.large_) return a.small_ <=> b.small_;
  if (!a.large_) return std::strong_ordering::less;
  if (!b.large_) return std::strong_ordering::greater;
  if (a.large_ == b.large_) return std::strong_ordering::equal;
  const auto& x = *a.large_;
  const auto& y = *b.large_;
  auto i = x.rbegin();
  auto j = y.rbegin();
  for (; i != x.rend() && j != y.rend(); ++i, ++j) {
    if (auto c = *i <=> *j; c != 0) return c;
  }
  if (i != x.rend()) return std::strong_ordering::greater;
  if (j != y.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

bool operator==(const Natural& a, const Natural& b) { return (a <=> b) == 0; }

}  // namespace hfset
