#include "vilenkin/nullset.hpp"

#include <numeric>
#include <stdexcept>

namespace vilenkin {

GroupPoint PointRule::realize(std::size_t depth) const {
  GroupPoint x;
  x.digits.resize(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    x.digits[k] = digit(k);
  }
  return x;
}

namespace {

std::size_t period_span(const PointRule& a, const PointRule& b) {
  const std::size_t pa = a.period.empty() ? 1 : a.period.size();
  const std::size_t pb = b.period.empty() ? 1 : b.period.size();
  return std::lcm(pa, pb);
}

}  // namespace

bool same_sequence(const PointRule& a, const PointRule& b) {
  const std::size_t horizon =
      std::max(a.prefix.size(), b.prefix.size()) + period_span(a, b);
  for (std::size_t k = 0; k < horizon; ++k) {
    if (a.digit(k) != b.digit(k)) {
      return false;
    }
  }
  return true;
}

void validate_rule(const RadixSequence& m, const PointRule& rule) {
  const std::size_t rule_span = rule.period.empty() ? 1 : rule.period.size();
  const std::size_t horizon =
      std::max(rule.prefix.size(), m.prefix().size()) +
      std::lcm(rule_span, m.period().size());
  for (std::size_t k = 0; k < horizon; ++k) {
    if (rule.digit(k) >= m[k]) {
      throw std::invalid_argument("point digit out of range at position " +
                                  std::to_string(k));
    }
  }
}

void validate_nullset(const RadixSequence& m, const NullSetSpec& set) {
  if (set.points.empty()) {
    throw std::invalid_argument("null set needs at least one point");
  }
  if (set.stages < 1) {
    throw std::invalid_argument("stage count must be at least 1");
  }
  for (const PointRule& rule : set.points) {
    validate_rule(m, rule);
  }
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    for (std::size_t j = i + 1; j < set.points.size(); ++j) {
      if (same_sequence(set.points[i], set.points[j])) {
        throw std::invalid_argument("points " + std::to_string(i) + " and " +
                                    std::to_string(j) +
                                    " denote the same element");
      }
    }
  }
}

}  // namespace vilenkin
