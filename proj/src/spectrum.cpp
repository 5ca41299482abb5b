#include "vilenkin/spectrum.hpp"

#include <stdexcept>

#include "vilenkin/character.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

void SparseSpectrum::set(const SpectralIndex& index,
                         std::complex<double> amplitude) {
  if (amplitude == std::complex<double>{0.0, 0.0}) {
    entries_.erase(index);
    return;
  }
  entries_[index] = amplitude;
}

void SparseSpectrum::add(const SpectralIndex& index,
                         std::complex<double> amplitude) {
  auto it = entries_.find(index);
  if (it == entries_.end()) {
    set(index, amplitude);
    return;
  }
  it->second += amplitude;
  if (it->second == std::complex<double>{0.0, 0.0}) entries_.erase(it);
}

std::complex<double> SparseSpectrum::amplitude(const BigInt& index_value) const {
  auto it = entries_.find(index_value);
  return it == entries_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

bool SparseSpectrum::contains(const BigInt& index_value) const {
  return entries_.find(index_value) != entries_.end();
}

void SparseSpectrum::prune(double threshold) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (std::abs(it->second) < threshold)
      it = entries_.erase(it);
    else
      ++it;
  }
}

std::complex<double> evaluate(const RadixSequence& m, const SparseSpectrum& f,
                              const GroupPoint& x) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [index, amplitude] : f)
    acc += amplitude * character(m, index, x);
  return acc;
}

std::complex<double> partial_sum(const RadixSequence& m,
                                 const SparseSpectrum& f, const BigInt& n,
                                 const GroupPoint& x) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = f.begin(); it != f.end() && it->first.value() < n; ++it)
    acc += it->second * character(m, it->first, x);
  return acc;
}

std::complex<double> fejer_mean(const RadixSequence& m, const SparseSpectrum& f,
                                const BigInt& n, const GroupPoint& x) {
  if (n < 1) throw std::invalid_argument("fejer_mean: n must be >= 1");
  std::complex<double> acc{0.0, 0.0};
  for (auto it = f.begin(); it != f.end() && it->first.value() < n; ++it) {
    const double weight = to_double(BigRat(n - it->first.value(), n));
    acc += weight * it->second * character(m, it->first, x);
  }
  return acc;
}

std::complex<double> fejer_mean_oracle(const RadixSequence& m,
                                       const SparseSpectrum& f, std::uint32_t n,
                                       const GroupPoint& x) {
  if (n < 1) throw std::invalid_argument("fejer_mean_oracle: n must be >= 1");
  if (n > 10'000)
    throw std::invalid_argument("fejer_mean_oracle: guarded to n <= 1e4");
  std::complex<double> acc{0.0, 0.0};
  for (std::uint32_t k = 1; k <= n; ++k)
    acc += partial_sum(m, f, BigInt(k), x);
  return acc / static_cast<double>(n);
}

double maximal_truncated(const RadixSequence& m, const SparseSpectrum& f,
                         const GroupPoint& x, std::span<const BigInt> indices,
                         MaximalKind kind) {
  if (indices.empty())
    throw std::invalid_argument("maximal_truncated: index set must be non-empty");
  double best = 0.0;
  for (const BigInt& n : indices) {
    const std::complex<double> v = kind == MaximalKind::fejer_means
                                       ? fejer_mean(m, f, n, x)
                                       : partial_sum(m, f, n, x);
    best = std::max(best, std::abs(v));
  }
  return best;
}

SparseSpectrum to_spectrum(const ScaleSequence& scales,
                           const SampledFunction& f, double prune) {
  const std::vector<std::complex<double>> coefficients = forward(scales, f);
  SparseSpectrum out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (std::abs(coefficients[k]) < prune) continue;
    out.set(SpectralIndex::from_value(scales, BigInt(k)), coefficients[k]);
  }
  return out;
}

SampledFunction to_sampled(const ScaleSequence& scales, const SparseSpectrum& f,
                           std::size_t level) {
  const std::size_t size = dense_size(scales, level);
  std::vector<std::complex<double>> coefficients(size);
  for (const auto& [index, amplitude] : f) {
    if (index.value() >= size)
      throw std::invalid_argument("to_sampled: spectrum key at or above M_N");
    coefficients[index.value().convert_to<std::size_t>()] = amplitude;
  }
  return inverse(scales, level, coefficients);
}

}  // namespace vilenkin
