#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>

#include "vilenkin/group.hpp"
#include "vilenkin/index.hpp"
#include "vilenkin/sampled.hpp"

namespace vilenkin {

/// Finite map index -> complex amplitude; all stored amplitudes nonzero.
/// Entries are ordered by index value, so prefix sums below a cutoff cost
/// only the number of entries below it.
class SparseSpectrum {
 public:
  struct ValueLess {
    using is_transparent = void;
    bool operator()(const SpectralIndex& a, const SpectralIndex& b) const {
      return a.value() < b.value();
    }
    bool operator()(const SpectralIndex& a, const BigInt& b) const {
      return a.value() < b;
    }
    bool operator()(const BigInt& a, const SpectralIndex& b) const {
      return a < b.value();
    }
  };
  using Map = std::map<SpectralIndex, std::complex<double>, ValueLess>;
  using const_iterator = Map::const_iterator;

  /// Inserting a zero amplitude removes the entry.
  void set(const SpectralIndex& index, std::complex<double> amplitude);
  void add(const SpectralIndex& index, std::complex<double> amplitude);

  std::complex<double> amplitude(const BigInt& index_value) const;
  bool contains(const BigInt& index_value) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  /// First entry with index >= bound.
  const_iterator lower_bound(const BigInt& bound) const {
    return entries_.lower_bound(bound);
  }

  /// Drops entries with |amplitude| below the threshold.
  void prune(double threshold);

 private:
  Map entries_;
};

/// Full evaluation sum_k f^(k) psi_k(x) over the (finite) support.
std::complex<double> evaluate(const RadixSequence& m, const SparseSpectrum& f,
                              const GroupPoint& x);

/// Partial sum S_n f(x) = sum_{k < n} f^(k) psi_k(x). n may be astronomically
/// large; cost is the number of entries below n.
std::complex<double> partial_sum(const RadixSequence& m,
                                 const SparseSpectrum& f, const BigInt& n,
                                 const GroupPoint& x);

/// Fejer mean sigma_n f(x) = sum_{k < n} (1 - k/n) f^(k) psi_k(x), n >= 1.
/// Each weight is formed as an exact big-integer rational and rounded once.
std::complex<double> fejer_mean(const RadixSequence& m, const SparseSpectrum& f,
                                const BigInt& n, const GroupPoint& x);

/// The Cesaro-averaging route (1/n) sum_{k=1}^{n} S_k f(x), summed literally.
/// Guarded to n <= 1e4; equals fejer_mean by the summation-by-parts identity.
std::complex<double> fejer_mean_oracle(const RadixSequence& m,
                                       const SparseSpectrum& f, std::uint32_t n,
                                       const GroupPoint& x);

enum class MaximalKind { fejer_means, partial_sums };

/// Truncated maximal operator: max over the supplied index set of
/// |sigma_n f(x)| (or |S_n f(x)|). The index set must be non-empty.
double maximal_truncated(const RadixSequence& m, const SparseSpectrum& f,
                         const GroupPoint& x, std::span<const BigInt> indices,
                         MaximalKind kind);

/// Dense -> sparse: forward transform, then prune amplitudes below the
/// threshold (keeps indicator spectra exactly finite).
SparseSpectrum to_spectrum(const ScaleSequence& scales,
                           const SampledFunction& f, double prune = 1e-14);

/// Sparse -> dense at a level covering the support (every key < M_level).
SampledFunction to_sampled(const ScaleSequence& scales, const SparseSpectrum& f,
                           std::size_t level);

}  // namespace vilenkin
