#pragma once

#include <cstddef>
#include <vector>

#include "vilenkin/bigint.hpp"
#include "vilenkin/group.hpp"
#include "vilenkin/nullset.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// Interval cover of the null set, partitioned into stage blocks: stage j
/// (0-based) owns intervals [blocks[j], blocks[j+1]). Invariants: total
/// measure < 1, tail measure from blocks[j] below 1/M_j, and every point of
/// the covered set lies in some interval of every block.
struct CoverSchedule {
  std::vector<Interval> intervals;
  std::vector<std::size_t> blocks;

  std::size_t stages() const { return blocks.empty() ? 0 : blocks.size() - 1; }
};

/// Exact sum of measures of intervals[from..).
BigRat tail_measure(const ScaleSequence& scales,
                    const std::vector<Interval>& intervals, std::size_t from);

/// Greedy minimal boundaries 0 = n_0 < n_1 < ... < n_J = intervals.size()
/// with tail measure from n_j below 1/M_j for every j. Throws when no
/// boundary can satisfy a tail bound or a block would come out empty.
std::vector<std::size_t> select_blocks(const ScaleSequence& scales,
                                       const std::vector<Interval>& intervals,
                                       std::size_t stages);

/// Covers every point once per stage with cylinders of a canonical per-stage
/// depth: working from the last stage backward, the depth is the smallest one
/// whose block measure plus the measure of all later blocks stays below
/// 1/M_{j-1}. Block boundaries then fall on the stage groups, which keeps
/// every point covered in every block (a greedy boundary search alone may
/// legally cut inside a group and lose coverage).
CoverSchedule build_cover(const ScaleSequence& scales, const NullSetSpec& set);

/// Re-checks every CoverSchedule invariant with exact rationals.
void validate_cover(const ScaleSequence& scales, const CoverSchedule& cover,
                    const NullSetSpec& set);

}  // namespace vilenkin
