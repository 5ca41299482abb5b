#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vilenkin/bigint.hpp"
#include "vilenkin/cover.hpp"
#include "vilenkin/flat.hpp"
#include "vilenkin/group.hpp"
#include "vilenkin/nullset.hpp"
#include "vilenkin/plan.hpp"
#include "vilenkin/spectrum.hpp"

namespace vilenkin {

/// Everything the divergence certificates need: the cover, one flat
/// polynomial per stage block, the exponent ladder, and the assembled
/// function f = sum_l psi_{M_{beta_{l+1}}} P_l.
struct Construction {
  CoverSchedule cover;
  std::vector<FlatPolynomial> polys;
  ExponentPlan plan;
  SparseSpectrum spectrum;
};

/// Modulates each P_l by psi_{M_{beta_{l+1}}}. Each shifted key is verified
/// to equal the plain sum M_{beta_{l+1}} + k (disjoint digit supports), and
/// the modulated windows [M_{beta_{l+1}}+M_{alpha_l},
/// M_{beta_{l+1}}+M_{alpha_{l+1}}) must be pairwise disjoint. Throws on any
/// collision; entry counts are preserved exactly.
SparseSpectrum assemble(const ScaleSequence& scales, const ExponentPlan& plan,
                        const std::vector<FlatPolynomial>& polys);

/// Closed-form coefficient of f: locate the stage window containing k and
/// look the amplitude up in that stage's polynomial; 0 between windows.
std::complex<double> coefficient_case_split(
    const ScaleSequence& scales, const SpectralIndex& k,
    const ExponentPlan& plan, const std::vector<FlatPolynomial>& polys);

/// Full pipeline: cover -> blocks -> flat polynomials -> exponents -> f.
Construction build_construction(const ScaleSequence& scales,
                                const NullSetSpec& set);

/// One certified oscillation of the Fejer means at x between
/// n_lo = M_{alpha_{j-1}} + M_{beta_j} and n_hi = (M_{alpha_j} + M_{beta_j})^3
/// for the 1-based stage j. The difference splits as I - II + III:
///   I   = psi_{M_{beta_j}}(x) P_{j-1}(x), unit modulus on the stage support;
///   II  = sum over stage j-1 keys of (k/n_hi) f^(k) psi_k(x);
///   III = sum over stages l < j-1 of (k/n_lo - k/n_hi) f^(k) psi_k(x).
/// gap is |sigma_{n_hi}f(x) - sigma_{n_lo}f(x)| evaluated independently;
/// certified means gap >= 1 - bound_ii - bound_iii.
struct DivergenceReport {
  std::size_t stage = 0;
  std::size_t point = 0;
  BigInt n_lo;
  BigInt n_hi;
  std::complex<double> term_i;
  std::complex<double> term_ii;
  std::complex<double> term_iii;
  std::complex<double> sigma_lo;
  std::complex<double> sigma_hi;
  double bound_ii = 0.0;
  double bound_iii = 0.0;
  double gap = 0.0;
  bool certified = false;
};

DivergenceReport divergence_gap(const ScaleSequence& scales,
                                const Construction& construction,
                                std::size_t stage, const GroupPoint& x);

struct DivergenceTable {
  Construction construction;
  std::vector<DivergenceReport> reports;

  bool all_certified() const;
};

/// Pipeline plus one report per (point, stage). Points are realized to one
/// digit past beta_J, the deepest position any key can touch.
DivergenceTable verify_divergence(const ScaleSequence& scales,
                                  const NullSetSpec& set);

struct CertificateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Asserts the gap certificate at every stage and point.
void require_certified(const DivergenceTable& table);

}  // namespace vilenkin
