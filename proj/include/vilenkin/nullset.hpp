#pragma once

#include <cstdint>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// A single group element given by an eventually periodic digit rule:
/// prefix digits first, then the period repeated forever. An empty period
/// means the digits are eventually zero.
struct PointRule {
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint32_t> period;

  std::uint32_t digit(std::size_t k) const {
    if (k < prefix.size()) {
      return prefix[k];
    }
    if (period.empty()) {
      return 0;
    }
    return period[(k - prefix.size()) % period.size()];
  }

  /// Truncation to the first `depth` digits.
  GroupPoint realize(std::size_t depth) const;

  bool operator==(const PointRule&) const = default;
};

/// Whether two rules denote the same digit sequence. Eventually periodic
/// sequences agree everywhere iff they agree up to the longer prefix plus
/// one common period length.
bool same_sequence(const PointRule& a, const PointRule& b);

/// Throws unless every digit the rule can produce is in range for its radix.
void validate_rule(const RadixSequence& m, const PointRule& rule);

/// The divergence target: a finite list of points together with the number
/// of construction stages to certify.
struct NullSetSpec {
  std::vector<PointRule> points;
  std::size_t stages = 0;
};

/// Points valid and pairwise distinct, at least one point, stages >= 1.
void validate_nullset(const RadixSequence& m, const NullSetSpec& set);

}  // namespace vilenkin
