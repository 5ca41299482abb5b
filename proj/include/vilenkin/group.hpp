#pragma once

#include <cstdint>
#include <vector>

#include "vilenkin/bigint.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// Truncated group element: digit vector (x_0, ..., x_{N-1}) with
/// x_k in {0, ..., m_k - 1}. Digits beyond the stored level are 0, making a
/// point the canonical representative of its cylinder.
struct GroupPoint {
  std::vector<std::uint32_t> digits;

  std::size_t level() const { return digits.size(); }
  std::uint32_t digit(std::size_t k) const {
    return k < digits.size() ? digits[k] : 0;
  }

  bool operator==(const GroupPoint&) const = default;
};

GroupPoint zero_point(std::size_t level);

/// Throws unless every digit is in range for its radix.
void validate_point(const RadixSequence& m, const GroupPoint& x);

/// Coordinatewise addition mod m_k; levels aligned by zero-padding.
GroupPoint group_add(const RadixSequence& m, const GroupPoint& x,
                     const GroupPoint& y);

/// Coordinatewise additive inverse: x + (-x) = 0.
GroupPoint group_negate(const RadixSequence& m, const GroupPoint& x);

/// Cylinder set I_n(y): the points agreeing with the anchor in the first n
/// digits. Haar measure is exactly 1/M_n. The anchor is stored canonically
/// with exactly n digits.
class Interval {
 public:
  Interval(const RadixSequence& m, const GroupPoint& anchor, std::size_t depth);

  const GroupPoint& anchor() const { return anchor_; }
  std::size_t depth() const { return anchor_.digits.size(); }

  bool contains(const GroupPoint& x) const;
  BigRat measure(const ScaleSequence& scales) const;

  /// True when this cylinder contains the other (depth <= other.depth and
  /// anchors agree on the first depth digits).
  bool contains(const Interval& other) const;

  bool operator==(const Interval&) const = default;

 private:
  GroupPoint anchor_;
};

/// Collapses a finite union of cylinders to pairwise-disjoint ones: any
/// cylinder contained in another is dropped, duplicates removed. Output is
/// sorted by (depth, anchor digits) for deterministic downstream artifacts.
std::vector<Interval> merge_disjoint(std::vector<Interval> intervals);

BigRat total_measure(const ScaleSequence& scales,
                     const std::vector<Interval>& intervals);

bool member_of_union(const std::vector<Interval>& intervals,
                     const GroupPoint& x);

}  // namespace vilenkin
