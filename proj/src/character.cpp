#include "vilenkin/character.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace vilenkin {

std::complex<double> unit_root(std::uint64_t num, std::uint64_t den) {
  num %= den;
  const std::uint64_t g = std::gcd(num == 0 ? den : num, den);
  num /= g;
  den /= g;
  if (den == 1) return {1.0, 0.0};
  if (den == 2) return {-1.0, 0.0};
  if (den == 4) return num == 1 ? std::complex<double>{0.0, 1.0}
                                : std::complex<double>{0.0, -1.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(den);
  return {std::cos(theta), std::sin(theta)};
}

std::complex<double> rademacher(const RadixSequence& m, std::size_t position,
                                const GroupPoint& x) {
  return unit_root(x.digit(position), m[position]);
}

std::complex<double> character(const RadixSequence& m, const SpectralIndex& n,
                               const GroupPoint& x) {
  const std::uint64_t lcm = m.phase_lcm();
  if (lcm != 0) {
    // phase = sum_k (x_k n_k mod m_k) / m_k, held exactly over units of 1/lcm
    std::uint64_t acc = 0;
    for (const auto& [position, digit] : n.digits()) {
      if (position >= x.level()) break;  // x digit is 0, factor is 1
      const std::uint64_t mk = m[position];
      const std::uint64_t t =
          (static_cast<std::uint64_t>(x.digits[position]) * digit) % mk;
      acc = (acc + t * (lcm / mk)) % lcm;
    }
    return unit_root(acc, lcm);
  }
  // unbounded lcm: accumulate fractional phases in floating point
  double frac = 0.0;
  for (const auto& [position, digit] : n.digits()) {
    if (position >= x.level()) break;
    const std::uint64_t mk = m[position];
    const std::uint64_t t =
        (static_cast<std::uint64_t>(x.digits[position]) * digit) % mk;
    frac += static_cast<double>(t) / static_cast<double>(mk);
  }
  frac -= std::floor(frac);
  const double theta = 2.0 * std::numbers::pi * frac;
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace vilenkin
