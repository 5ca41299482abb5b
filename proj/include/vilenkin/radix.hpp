#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "vilenkin/bigint.hpp"

namespace vilenkin {

/// Bounded generator sequence m = (m_0, m_1, ...) of the group, stored as a
/// finite prefix followed by a period repeated forever. Every m_k >= 2, so
/// arbitrarily high positions are defined without unbounded storage.
class RadixSequence {
 public:
  RadixSequence(std::vector<std::uint32_t> prefix,
                std::vector<std::uint32_t> period);

  /// The constant sequence m_k = m for all k.
  static RadixSequence constant(std::uint32_t m) { return {{}, {m}}; }

  std::uint32_t operator[](std::size_t k) const {
    return k < prefix_.size()
               ? prefix_[k]
               : period_[(k - prefix_.size()) % period_.size()];
  }

  /// sup_k m_k, attained on the stored prefix + one period.
  std::uint32_t bound() const { return bound_; }

  /// lcm of all radices, used for exact phase accumulation; 0 if it does not
  /// fit a conservative 32-bit budget (callers fall back to floating phases).
  std::uint64_t phase_lcm() const { return phase_lcm_; }

  const std::vector<std::uint32_t>& prefix() const { return prefix_; }
  const std::vector<std::uint32_t>& period() const { return period_; }

  bool operator==(const RadixSequence&) const = default;

 private:
  std::vector<std::uint32_t> prefix_;
  std::vector<std::uint32_t> period_;
  std::uint32_t bound_ = 2;
  std::uint64_t phase_lcm_ = 1;
};

/// Generalized number system M_0 = 1, M_{k+1} = m_k M_k. Values are cached;
/// the cache is grown under a lock so shared instances stay safe.
class ScaleSequence {
 public:
  explicit ScaleSequence(RadixSequence radix);

  const RadixSequence& radix() const { return radix_; }
  std::uint32_t radix_at(std::size_t k) const { return radix_[k]; }

  /// M_k, exact.
  BigInt at(std::size_t k) const;

  /// The level N with M_N == count, if one exists.
  std::optional<std::size_t> level_of(const BigInt& count) const;

 private:
  RadixSequence radix_;
  mutable std::mutex mutex_;
  mutable std::vector<BigInt> cache_;
};

}  // namespace vilenkin
