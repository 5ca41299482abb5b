#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vilenkin/radix.hpp"
#include "vilenkin/sampled.hpp"

namespace vilenkin {

/// Forward fast transform: coefficient k is (1/M_N) sum_x f(x) conj(psi_k(x))
/// for every k < M_N. Factorized as one small DFT per digit position (the
/// kernel is the tensor product of the cyclic DFT matrices), so the total
/// cost is O(M_N * sum_{k<N} m_k). Deterministic, single-threaded.
std::vector<std::complex<double>> forward(const ScaleSequence& scales,
                                          const SampledFunction& f);

/// Adjoint path: inverse(forward(f)) == f. Coefficient vector length must be
/// exactly M_level.
SampledFunction inverse(const ScaleSequence& scales, std::size_t level,
                        std::span<const std::complex<double>> coefficients);

}  // namespace vilenkin
