#include "vilenkin/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace vilenkin {

GroupPoint zero_point(std::size_t level) {
  return GroupPoint{std::vector<std::uint32_t>(level, 0)};
}

void validate_point(const RadixSequence& m, const GroupPoint& x) {
  for (std::size_t k = 0; k < x.digits.size(); ++k)
    if (x.digits[k] >= m[k])
      throw std::invalid_argument("group point: digit out of range at position " +
                                  std::to_string(k));
}

GroupPoint group_add(const RadixSequence& m, const GroupPoint& x,
                     const GroupPoint& y) {
  GroupPoint out = zero_point(std::max(x.level(), y.level()));
  for (std::size_t k = 0; k < out.digits.size(); ++k)
    out.digits[k] = (x.digit(k) + y.digit(k)) % m[k];
  return out;
}

GroupPoint group_negate(const RadixSequence& m, const GroupPoint& x) {
  GroupPoint out = zero_point(x.level());
  for (std::size_t k = 0; k < out.digits.size(); ++k)
    out.digits[k] = x.digits[k] == 0 ? 0 : m[k] - x.digits[k];
  return out;
}

Interval::Interval(const RadixSequence& m, const GroupPoint& anchor,
                   std::size_t depth) {
  validate_point(m, anchor);
  anchor_.digits.resize(depth);
  for (std::size_t k = 0; k < depth; ++k) anchor_.digits[k] = anchor.digit(k);
}

bool Interval::contains(const GroupPoint& x) const {
  for (std::size_t k = 0; k < anchor_.digits.size(); ++k)
    if (x.digit(k) != anchor_.digits[k]) return false;
  return true;
}

BigRat Interval::measure(const ScaleSequence& scales) const {
  return BigRat(BigInt(1), scales.at(depth()));
}

bool Interval::contains(const Interval& other) const {
  return depth() <= other.depth() && contains(other.anchor_);
}

std::vector<Interval> merge_disjoint(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              if (a.depth() != b.depth()) return a.depth() < b.depth();
              return a.anchor().digits < b.anchor().digits;
            });
  std::vector<Interval> kept;
  for (const Interval& candidate : intervals) {
    bool covered = false;
    for (const Interval& k : kept)
      if (k.contains(candidate)) {
        covered = true;
        break;
      }
    if (!covered) kept.push_back(candidate);
  }
  return kept;
}

BigRat total_measure(const ScaleSequence& scales,
                     const std::vector<Interval>& intervals) {
  BigRat sum(0);
  for (const Interval& i : intervals) sum += i.measure(scales);
  return sum;
}

bool member_of_union(const std::vector<Interval>& intervals,
                     const GroupPoint& x) {
  return std::any_of(intervals.begin(), intervals.end(),
                     [&](const Interval& i) { return i.contains(x); });
}

}  // namespace vilenkin
