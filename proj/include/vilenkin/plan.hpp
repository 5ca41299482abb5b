#pragma once

#include <cstddef>
#include <vector>

#include "vilenkin/radix.hpp"

namespace vilenkin {

/// Exponent ladder 0 = alpha_0 < alpha_1 < ... and beta_0 < beta_1 < ... with
/// alpha_j < beta_j, chosen so that for every consecutive pair the chain
///   M_{b_j}^3 < (M_{a_j}+M_{b_j})^3 < M_{a_j}+M_{b_{j+1}}
///             < M_{a_{j+1}}+M_{b_{j+1}} < 2 M_{b_{j+1}}
/// holds with exact big-integer comparisons.
struct ExponentPlan {
  std::vector<std::size_t> alphas;
  std::vector<std::size_t> betas;

  std::size_t stages() const { return alphas.empty() ? 0 : alphas.size() - 1; }

  bool operator==(const ExponentPlan&) const = default;
};

/// All five chain comparisons for one consecutive pair, exact.
bool chain_holds(const ScaleSequence& scales, std::size_t alpha_j,
                 std::size_t alpha_next, std::size_t beta_j,
                 std::size_t beta_next);

/// Smallest beta_{j+1} > max(beta_j, alpha_{j+1}) making the chain hold.
/// Requires alpha_j < beta_j. The middle comparison is the only one that can
/// fail for large candidates, so the upward scan stops at the first hit.
std::size_t next_beta(const ScaleSequence& scales, std::size_t alpha_j,
                      std::size_t alpha_next, std::size_t beta_j);

/// Runs next_beta along the given window exponents, seeding beta_0 =
/// alpha_0 + 1, then re-verifies every inequality before returning.
ExponentPlan select_exponents(const ScaleSequence& scales,
                              const std::vector<std::size_t>& alphas);

/// Throws unless the plan satisfies every ExponentPlan invariant.
void validate_plan(const ScaleSequence& scales, const ExponentPlan& plan);

}  // namespace vilenkin
