#include "vilenkin/sampled.hpp"

#include <cmath>
#include <stdexcept>

#include "vilenkin/character.hpp"

namespace vilenkin {

std::size_t dense_size(const ScaleSequence& scales, std::size_t level) {
  const BigInt m = scales.at(level);
  if (m > 100'000'000)
    throw std::invalid_argument("dense path: M_N exceeds the 1e8 cell guard");
  return m.convert_to<std::size_t>();
}

GroupPoint point_of_cell(const RadixSequence& m, std::size_t level,
                         std::size_t cell) {
  GroupPoint x = zero_point(level);
  for (std::size_t k = 0; k < level; ++k) {
    const std::uint32_t mk = m[k];
    x.digits[k] = static_cast<std::uint32_t>(cell % mk);
    cell /= mk;
  }
  if (cell != 0)
    throw std::invalid_argument("cell index out of range for level");
  return x;
}

std::size_t cell_of_point(const RadixSequence& m, std::size_t level,
                          const GroupPoint& x) {
  std::size_t cell = 0;
  std::size_t stride = 1;
  for (std::size_t k = 0; k < level; ++k) {
    cell += stride * x.digit(k);
    stride *= m[k];
  }
  return cell;
}

SampledFunction zero_function(const ScaleSequence& scales, std::size_t level) {
  return SampledFunction{level, std::vector<std::complex<double>>(
                                    dense_size(scales, level))};
}

SampledFunction sample_character(const ScaleSequence& scales, std::size_t level,
                                 const SpectralIndex& n) {
  SampledFunction f = zero_function(scales, level);
  const RadixSequence& m = scales.radix();
  GroupPoint x = zero_point(level);
  for (std::size_t t = 0; t < f.values.size(); ++t) {
    f.values[t] = character(m, n, x);
    for (std::size_t k = 0; k < level; ++k) {  // mixed-radix counter step
      if (++x.digits[k] < m[k]) break;
      x.digits[k] = 0;
    }
  }
  return f;
}

std::complex<double> integral(const SampledFunction& f) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& v : f.values) sum += v;
  return sum / static_cast<double>(f.values.size());
}

double lp_norm(const SampledFunction& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  double sum = 0.0;
  for (const auto& v : f.values) sum += std::pow(std::abs(v), p);
  return std::pow(sum / static_cast<double>(f.values.size()), 1.0 / p);
}

}  // namespace vilenkin
