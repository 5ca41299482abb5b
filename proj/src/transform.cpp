#include "vilenkin/transform.hpp"

#include <map>
#include <stdexcept>

#include "vilenkin/character.hpp"

namespace vilenkin {

namespace {

// apply the cyclic DFT of order m along the digit axis with the given stride;
// conjugated kernel for the forward direction
void dft_axis(std::vector<std::complex<double>>& v, std::size_t stride,
              std::uint32_t m, bool conjugate) {
  std::vector<std::complex<double>> twiddle(m);
  for (std::uint32_t t = 0; t < m; ++t)
    twiddle[t] = unit_root(conjugate ? (m - t % m) % m : t, m);

  std::vector<std::complex<double>> in(m), out(m);
  const std::size_t block = stride * m;
  for (std::size_t base = 0; base < v.size(); base += block) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      for (std::uint32_t r = 0; r < m; ++r)
        in[r] = v[base + offset + r * stride];
      for (std::uint32_t s = 0; s < m; ++s) {
        std::complex<double> acc{0.0, 0.0};
        for (std::uint32_t r = 0; r < m; ++r)
          acc += in[r] * twiddle[(static_cast<std::uint64_t>(r) * s) % m];
        out[s] = acc;
      }
      for (std::uint32_t s = 0; s < m; ++s)
        v[base + offset + s * stride] = out[s];
    }
  }
}

void transform_in_place(const ScaleSequence& scales, std::size_t level,
                        std::vector<std::complex<double>>& v, bool conjugate) {
  std::size_t stride = 1;
  for (std::size_t k = 0; k < level; ++k) {
    const std::uint32_t m = scales.radix_at(k);
    dft_axis(v, stride, m, conjugate);
    stride *= m;
  }
}

}  // namespace

std::vector<std::complex<double>> forward(const ScaleSequence& scales,
                                          const SampledFunction& f) {
  const std::size_t size = dense_size(scales, f.level);
  if (f.values.size() != size)
    throw std::invalid_argument("forward: sample count must equal M_N");
  std::vector<std::complex<double>> coefficients = f.values;
  transform_in_place(scales, f.level, coefficients, /*conjugate=*/true);
  const double norm = 1.0 / static_cast<double>(size);
  for (auto& c : coefficients) c *= norm;
  return coefficients;
}

SampledFunction inverse(const ScaleSequence& scales, std::size_t level,
                        std::span<const std::complex<double>> coefficients) {
  const std::size_t size = dense_size(scales, level);
  if (coefficients.size() != size)
    throw std::invalid_argument("inverse: coefficient count must equal M_N");
  SampledFunction f;
  f.level = level;
  f.values.assign(coefficients.begin(), coefficients.end());
  transform_in_place(scales, level, f.values, /*conjugate=*/false);
  return f;
}

}  // namespace vilenkin
