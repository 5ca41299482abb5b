#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "vilenkin/bigint.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// A frequency index n = sum_j n_j M_j kept in two mutually consistent views:
/// the exact integer value and the sparse digit map (position -> nonzero
/// digit). The digit view drives character evaluation, so astronomically
/// large indices cost only their nonzero-digit count.
class SpectralIndex {
 public:
  using Digit = std::pair<std::size_t, std::uint32_t>;  // (position, n_j)

  SpectralIndex() = default;

  /// Mixed-radix expansion of a non-negative integer; rejects negatives.
  static SpectralIndex from_value(const ScaleSequence& scales, BigInt value);

  /// Inverse direction: value = sum n_j M_j. Digits must be in range,
  /// positions strictly ascending; zero digits are dropped.
  static SpectralIndex from_digits(const ScaleSequence& scales,
                                   std::vector<Digit> digits);

  const BigInt& value() const { return value_; }
  const std::vector<Digit>& digits() const { return digits_; }

  std::uint32_t digit(std::size_t position) const;
  bool is_zero() const { return digits_.empty(); }

  bool operator==(const SpectralIndex& o) const { return value_ == o.value_; }
  bool operator<(const SpectralIndex& o) const { return value_ < o.value_; }

 private:
  BigInt value_;
  std::vector<Digit> digits_;  // ascending positions, digits nonzero
};

/// Digitwise (n_j + k_j) mod m_j; the dual-group operation.
SpectralIndex oplus(const ScaleSequence& scales, const SpectralIndex& n,
                    const SpectralIndex& k);

/// Digitwise additive inverse: n (+) digit_complement(n) = 0.
SpectralIndex digit_complement(const ScaleSequence& scales,
                               const SpectralIndex& n);

}  // namespace vilenkin
