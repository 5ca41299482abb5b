#pragma once

#include <complex>
#include <cstdint>

#include "vilenkin/group.hpp"
#include "vilenkin/index.hpp"
#include "vilenkin/radix.hpp"

namespace vilenkin {

/// exp(2*pi*i * num/den) with num reduced mod den. Quadrant phases (den
/// dividing 4 after reduction) come out as exact unit values, so dyadic
/// characters are exact +-1.
std::complex<double> unit_root(std::uint64_t num, std::uint64_t den);

/// Generalized Rademacher function r_k(x) = exp(2*pi*i x_k/m_k).
std::complex<double> rademacher(const RadixSequence& m, std::size_t position,
                                const GroupPoint& x);

/// Vilenkin character psi_n(x) = prod_k r_k^{n_k}(x). The phase is
/// accumulated as an exact integer over lcm(m_k) when that fits, and rounded
/// once; cost is proportional to the number of nonzero digits of n.
std::complex<double> character(const RadixSequence& m, const SpectralIndex& n,
                               const GroupPoint& x);

}  // namespace vilenkin
