#include "vilenkin/radix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vilenkin {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (b > (std::uint64_t{1} << 32) / q) return 0;  // budget exceeded
  return q * b;
}

}  // namespace

RadixSequence::RadixSequence(std::vector<std::uint32_t> prefix,
                             std::vector<std::uint32_t> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty())
    throw std::invalid_argument("radix sequence: period must be non-empty");
  for (auto m : prefix_)
    if (m < 2) throw std::invalid_argument("radix sequence: every m_k >= 2");
  for (auto m : period_)
    if (m < 2) throw std::invalid_argument("radix sequence: every m_k >= 2");
  bound_ = 2;
  phase_lcm_ = 1;
  for (auto m : prefix_) {
    bound_ = std::max(bound_, m);
    phase_lcm_ = checked_lcm(phase_lcm_, m);
  }
  for (auto m : period_) {
    bound_ = std::max(bound_, m);
    phase_lcm_ = checked_lcm(phase_lcm_, m);
  }
}

ScaleSequence::ScaleSequence(RadixSequence radix) : radix_(std::move(radix)) {
  cache_.push_back(BigInt(1));
}

BigInt ScaleSequence::at(std::size_t k) const {
  std::scoped_lock lock(mutex_);
  while (cache_.size() <= k) {
    const std::size_t j = cache_.size() - 1;
    cache_.push_back(cache_.back() * radix_[j]);
  }
  return cache_[k];
}

std::optional<std::size_t> ScaleSequence::level_of(const BigInt& count) const {
  if (count < 1) return std::nullopt;
  BigInt m(1);
  std::size_t level = 0;
  while (m < count) {
    m *= radix_[level];
    ++level;
  }
  if (m == count) return level;
  return std::nullopt;
}

}  // namespace vilenkin
