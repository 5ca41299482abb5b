#include "vilenkin/flat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "vilenkin/character.hpp"
#include "vilenkin/sampled.hpp"

namespace vilenkin {

namespace {

constexpr std::size_t kIndicatorKeyGuard = 1'000'000;

}  // namespace

std::complex<double> FlatPolynomial::evaluate(const RadixSequence& m,
                                              const GroupPoint& x) const {
  if (!member_of_union(support, x)) {
    return 0.0;
  }
  return character(m, shift, x);
}

FlatPolynomial flat_polynomial(const ScaleSequence& scales,
                               std::vector<Interval> support,
                               std::size_t window_lo) {
  if (support.empty()) {
    throw std::invalid_argument("flat polynomial needs a non-empty union");
  }
  const RadixSequence& m = scales.radix();
  FlatPolynomial poly;
  poly.support = merge_disjoint(std::move(support));
  poly.window_lo = window_lo;

  std::size_t deepest = 0;
  for (const Interval& interval : poly.support) {
    deepest = std::max(deepest, interval.depth());
  }
  const std::size_t t = std::max(window_lo, deepest);
  poly.window_hi = t + 1;
  poly.shift = SpectralIndex::from_digits(scales, {{t, 1}});

  for (const Interval& interval : poly.support) {
    if (scales.at(interval.depth()) > kIndicatorKeyGuard) {
      throw std::invalid_argument(
          "interval too deep for indicator spectrum enumeration");
    }
    const auto keys = scales.at(interval.depth()).convert_to<std::size_t>();
    const double scale = 1.0 / to_double(scales.at(interval.depth()));
    for (std::size_t k = 0; k < keys; ++k) {
      const SpectralIndex index = SpectralIndex::from_value(scales, BigInt(k));
      const std::complex<double> phase =
          std::conj(character(m, index, interval.anchor()));
      poly.spectrum.add(oplus(scales, poly.shift, index), phase * scale);
    }
  }
  poly.spectrum.prune(1e-14);
  return poly;
}

}  // namespace vilenkin
