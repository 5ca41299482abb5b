#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/index.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// A function on the level-N truncation of the group: M_N complex samples in
/// the canonical mixed-radix enumeration (cell t <-> the digits of t). Each
/// level-N cell has Haar measure 1/M_N.
struct SampledFunction {
  std::size_t level = 0;
  std::vector<std::complex<double>> values;
};

/// M_level as a machine size; throws past the dense-path guard (1e8 cells).
std::size_t dense_size(const ScaleSequence& scales, std::size_t level);

GroupPoint point_of_cell(const RadixSequence& m, std::size_t level,
                         std::size_t cell);
std::size_t cell_of_point(const RadixSequence& m, std::size_t level,
                          const GroupPoint& x);

SampledFunction zero_function(const ScaleSequence& scales, std::size_t level);

/// psi_n sampled on every level-`level` cell.
SampledFunction sample_character(const ScaleSequence& scales, std::size_t level,
                                 const SpectralIndex& n);

/// Haar integral: (1/M_N) * sum of samples.
std::complex<double> integral(const SampledFunction& f);

/// ((1/M_N) sum |f|^p)^(1/p); requires p >= 1.
double lp_norm(const SampledFunction& f, double p);

}  // namespace vilenkin
