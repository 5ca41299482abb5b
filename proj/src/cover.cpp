#include "vilenkin/cover.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace vilenkin {

namespace {

constexpr std::size_t kDepthSearchCap = 1000;

std::vector<Interval> stage_intervals(const RadixSequence& m,
                                      const std::vector<PointRule>& points,
                                      std::size_t depth) {
  std::vector<Interval> group;
  group.reserve(points.size());
  for (const PointRule& rule : points) {
    group.emplace_back(m, rule.realize(depth), depth);
  }
  return merge_disjoint(std::move(group));
}

}  // namespace

BigRat tail_measure(const ScaleSequence& scales,
                    const std::vector<Interval>& intervals, std::size_t from) {
  BigRat total = 0;
  for (std::size_t k = from; k < intervals.size(); ++k) {
    total += intervals[k].measure(scales);
  }
  return total;
}

std::vector<std::size_t> select_blocks(const ScaleSequence& scales,
                                       const std::vector<Interval>& intervals,
                                       std::size_t stages) {
  if (stages < 1) {
    throw std::invalid_argument("stage count must be at least 1");
  }
  if (!(tail_measure(scales, intervals, 0) < BigRat(1))) {
    throw std::runtime_error("infeasible: cover measures do not sum below 1");
  }
  std::vector<std::size_t> blocks{0};
  for (std::size_t j = 1; j < stages; ++j) {
    if (blocks.back() >= intervals.size()) {
      throw std::runtime_error("infeasible: block " + std::to_string(j - 1) +
                               " would exhaust the interval list");
    }
    const BigRat budget(BigInt(1), scales.at(j));
    std::size_t n = blocks.back() + 1;
    while (!(tail_measure(scales, intervals, n) < budget)) {
      ++n;
    }
    blocks.push_back(n);
  }
  if (blocks.back() >= intervals.size()) {
    throw std::runtime_error("infeasible: final block would be empty");
  }
  blocks.push_back(intervals.size());
  return blocks;
}

CoverSchedule build_cover(const ScaleSequence& scales, const NullSetSpec& set) {
  const RadixSequence& m = scales.radix();
  validate_nullset(m, set);
  const std::size_t stages = set.stages;
  std::vector<std::vector<Interval>> groups(stages);
  BigRat later = 0;
  for (std::size_t j = stages; j-- > 0;) {
    const BigRat budget(BigInt(1), scales.at(j));
    std::size_t depth = 1;
    while (true) {
      std::vector<Interval> group = stage_intervals(m, set.points, depth);
      if (total_measure(scales, group) + later < budget) {
        later += total_measure(scales, group);
        groups[j] = std::move(group);
        break;
      }
      if (++depth > kDepthSearchCap) {
        throw std::runtime_error(
            "infeasible: no stage depth satisfies the tail bound");
      }
    }
  }
  CoverSchedule cover;
  cover.blocks.push_back(0);
  for (std::vector<Interval>& group : groups) {
    for (Interval& interval : group) {
      cover.intervals.push_back(std::move(interval));
    }
    cover.blocks.push_back(cover.intervals.size());
  }
  validate_cover(scales, cover, set);
  return cover;
}

void validate_cover(const ScaleSequence& scales, const CoverSchedule& cover,
                    const NullSetSpec& set) {
  if (cover.blocks.size() != set.stages + 1 || cover.blocks.front() != 0 ||
      cover.blocks.back() != cover.intervals.size()) {
    throw std::invalid_argument("block boundaries do not span the cover");
  }
  for (std::size_t j = 0; j + 1 < cover.blocks.size(); ++j) {
    if (cover.blocks[j] >= cover.blocks[j + 1]) {
      throw std::invalid_argument("block boundaries must strictly increase");
    }
  }
  for (std::size_t j = 0; j < cover.blocks.size(); ++j) {
    const BigRat budget(BigInt(1), scales.at(j));
    if (!(tail_measure(scales, cover.intervals, cover.blocks[j]) < budget)) {
      throw std::runtime_error("tail measure bound fails at block " +
                               std::to_string(j));
    }
  }
  for (std::size_t j = 0; j + 1 < cover.blocks.size(); ++j) {
    for (std::size_t i = 0; i < set.points.size(); ++i) {
      bool covered = false;
      for (std::size_t k = cover.blocks[j]; k < cover.blocks[j + 1]; ++k) {
        const Interval& interval = cover.intervals[k];
        if (interval.contains(set.points[i].realize(interval.depth()))) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        throw std::runtime_error("block " + std::to_string(j) +
                                 " does not cover point " + std::to_string(i));
      }
    }
  }
}

}  // namespace vilenkin
