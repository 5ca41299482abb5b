#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "vilenkin/group.hpp"
#include "vilenkin/index.hpp"
#include "vilenkin/radix.hpp"
#include "vilenkin/spectrum.hpp"

namespace vilenkin {

/// P = chi_A psi_s: unit modulus on the union A, zero elsewhere, with every
/// frequency inside [M_{window_lo}, M_{window_hi}). The shift s = M_t with
/// t = max(window_lo, deepest interval depth), so the indicator frequencies
/// k < M_t land on digit positions disjoint from s and the shifted keys are
/// plain sums s + k.
struct FlatPolynomial {
  SparseSpectrum spectrum;
  std::vector<Interval> support;
  std::size_t stage = 0;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  SpectralIndex shift;

  /// Pointwise chi_A(x) psi_s(x): exactly 0 off the support.
  std::complex<double> evaluate(const RadixSequence& m,
                                const GroupPoint& x) const;
};

/// Builds P from a finite union of cylinders (merged to disjoint ones first)
/// and the lower window exponent. The indicator spectrum of I_n(y) is
/// {k < M_n -> conj(psi_k(y)) / M_n}; amplitudes cancelling exactly across
/// intervals are dropped. Throws on an empty union.
FlatPolynomial flat_polynomial(const ScaleSequence& scales,
                               std::vector<Interval> support,
                               std::size_t window_lo);

}  // namespace vilenkin
