#include "vilenkin/plan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "vilenkin/bigint.hpp"

namespace vilenkin {

namespace {

constexpr std::size_t kBetaSearchCap = 10'000;

BigInt cube(const BigInt& v) { return v * v * v; }

}  // namespace

bool chain_holds(const ScaleSequence& scales, std::size_t alpha_j,
                 std::size_t alpha_next, std::size_t beta_j,
                 std::size_t beta_next) {
  const BigInt ma = scales.at(alpha_j);
  const BigInt ma_next = scales.at(alpha_next);
  const BigInt mb = scales.at(beta_j);
  const BigInt mb_next = scales.at(beta_next);
  return cube(mb) < cube(ma + mb) && cube(ma + mb) < ma + mb_next &&
         ma + mb_next < ma_next + mb_next && ma_next + mb_next < 2 * mb_next;
}

std::size_t next_beta(const ScaleSequence& scales, std::size_t alpha_j,
                      std::size_t alpha_next, std::size_t beta_j) {
  if (alpha_j >= beta_j) {
    throw std::invalid_argument("need alpha_j < beta_j");
  }
  if (alpha_j >= alpha_next) {
    throw std::invalid_argument("window exponents must strictly increase");
  }
  for (std::size_t b = std::max(beta_j, alpha_next) + 1;
       b <= beta_j + kBetaSearchCap; ++b) {
    if (chain_holds(scales, alpha_j, alpha_next, beta_j, b)) {
      return b;
    }
  }
  throw std::runtime_error("exponent search exceeded its cap");
}

ExponentPlan select_exponents(const ScaleSequence& scales,
                              const std::vector<std::size_t>& alphas) {
  if (alphas.size() < 2) {
    throw std::invalid_argument("need at least one stage of window exponents");
  }
  ExponentPlan plan;
  plan.alphas = alphas;
  plan.betas.push_back(alphas[0] + 1);
  for (std::size_t j = 0; j + 1 < alphas.size(); ++j) {
    plan.betas.push_back(
        next_beta(scales, alphas[j], alphas[j + 1], plan.betas[j]));
  }
  validate_plan(scales, plan);
  return plan;
}

void validate_plan(const ScaleSequence& scales, const ExponentPlan& plan) {
  if (plan.alphas.size() != plan.betas.size() || plan.alphas.size() < 2) {
    throw std::invalid_argument("plan exponent lists malformed");
  }
  if (plan.alphas.front() != 0) {
    throw std::invalid_argument("first window exponent must be 0");
  }
  for (std::size_t j = 0; j < plan.alphas.size(); ++j) {
    if (plan.alphas[j] >= plan.betas[j]) {
      throw std::invalid_argument("need alpha < beta at stage " +
                                  std::to_string(j));
    }
    if (j + 1 < plan.alphas.size() &&
        (plan.alphas[j] >= plan.alphas[j + 1] ||
         plan.betas[j] >= plan.betas[j + 1])) {
      throw std::invalid_argument("exponents must strictly increase");
    }
  }
  for (std::size_t j = 0; j + 1 < plan.alphas.size(); ++j) {
    if (!chain_holds(scales, plan.alphas[j], plan.alphas[j + 1], plan.betas[j],
                     plan.betas[j + 1])) {
      throw std::runtime_error("exponent chain fails at stage " +
                               std::to_string(j));
    }
  }
}

}  // namespace vilenkin
