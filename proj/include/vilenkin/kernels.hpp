#pragma once

#include <complex>

#include "vilenkin/bigint.hpp"
#include "vilenkin/group.hpp"
#include "vilenkin/radix.hpp"
#include "vilenkin/sampled.hpp"

namespace vilenkin {

// Literal kernel sums are guarded so a huge n cannot trigger a silent
// quadratic blowup; the sparse spectral paths carry no such limit.
inline constexpr std::uint64_t kKernelSumGuard = 1'000'000;

/// Dirichlet kernel D_n(x) = sum_{k<n} psi_k(x), summed literally. n >= 1.
std::complex<double> dirichlet(const RadixSequence& m, const BigInt& n,
                               const GroupPoint& x);

/// Closed form for D_{M_n}: M_n on the cylinder I_n(0), 0 off it.
std::complex<double> paley_dirichlet(const ScaleSequence& scales,
                                     std::size_t depth, const GroupPoint& x);

/// Fejer kernel K_n(x) = sum_{k<n} (1 - k/n) psi_k(x), summed literally.
std::complex<double> fejer_kernel(const RadixSequence& m, const BigInt& n,
                                  const GroupPoint& x);

enum class KernelKind { dirichlet, fejer };

/// The kernel evaluated at the anchor of every level-`level` cell. Computed
/// by folding indices k to their residues mod M_N (anchors null the digits
/// above the level) and running one inverse fast transform, which matches
/// the literal sums exactly.
SampledFunction kernel_table(const ScaleSequence& scales, std::size_t level,
                             KernelKind kind, const BigInt& n);

}  // namespace vilenkin
