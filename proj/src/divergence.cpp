#include "vilenkin/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "vilenkin/character.hpp"
#include "vilenkin/index.hpp"

namespace vilenkin {

namespace {

/// Modulated key window of 0-based stage l:
/// [M_{beta_{l+1}} + M_{alpha_l}, M_{beta_{l+1}} + M_{alpha_{l+1}}).
std::pair<BigInt, BigInt> stage_window(const ScaleSequence& scales,
                                       const ExponentPlan& plan,
                                       std::size_t l) {
  const BigInt shift = scales.at(plan.betas[l + 1]);
  return {shift + scales.at(plan.alphas[l]),
          shift + scales.at(plan.alphas[l + 1])};
}

}  // namespace

SparseSpectrum assemble(const ScaleSequence& scales, const ExponentPlan& plan,
                        const std::vector<FlatPolynomial>& polys) {
  if (plan.stages() != polys.size()) {
    throw std::invalid_argument(
        "plan and polynomial list disagree on stage count");
  }
  validate_plan(scales, plan);
  for (std::size_t l = 0; l < polys.size(); ++l) {
    if (polys[l].window_lo != plan.alphas[l] ||
        polys[l].window_hi != plan.alphas[l + 1]) {
      throw std::invalid_argument(
          "polynomial window disagrees with the plan at stage " +
          std::to_string(l + 1));
    }
  }
  for (std::size_t l = 0; l + 1 < polys.size(); ++l) {
    if (!(stage_window(scales, plan, l).second <=
          stage_window(scales, plan, l + 1).first)) {
      throw std::runtime_error("modulated windows collide at stage " +
                               std::to_string(l + 1));
    }
  }
  SparseSpectrum f;
  std::size_t total = 0;
  for (std::size_t l = 0; l < polys.size(); ++l) {
    const SpectralIndex shift =
        SpectralIndex::from_digits(scales, {{plan.betas[l + 1], 1}});
    const auto [window_lo, window_hi] = stage_window(scales, plan, l);
    for (const auto& [key, amplitude] : polys[l].spectrum) {
      const SpectralIndex moved = oplus(scales, shift, key);
      if (moved.value() != shift.value() + key.value()) {
        throw std::runtime_error("digit collision while modulating stage " +
                                 std::to_string(l + 1));
      }
      if (moved.value() < window_lo || !(moved.value() < window_hi)) {
        throw std::runtime_error("modulated key escapes its window at stage " +
                                 std::to_string(l + 1));
      }
      f.set(moved, amplitude);
    }
    total += polys[l].spectrum.size();
  }
  if (f.size() != total) {
    throw std::runtime_error("modulated spectra overlap");
  }
  return f;
}

std::complex<double> coefficient_case_split(
    const ScaleSequence& scales, const SpectralIndex& k,
    const ExponentPlan& plan, const std::vector<FlatPolynomial>& polys) {
  for (std::size_t l = 0; l < polys.size(); ++l) {
    const auto [window_lo, window_hi] = stage_window(scales, plan, l);
    if (window_lo <= k.value() && k.value() < window_hi) {
      return polys[l].spectrum.amplitude(k.value() -
                                         scales.at(plan.betas[l + 1]));
    }
  }
  return 0.0;
}

Construction build_construction(const ScaleSequence& scales,
                                const NullSetSpec& set) {
  Construction c;
  c.cover = build_cover(scales, set);
  std::size_t window_lo = 0;
  for (std::size_t l = 0; l + 1 < c.cover.blocks.size(); ++l) {
    const auto first =
        c.cover.intervals.begin() + static_cast<std::ptrdiff_t>(c.cover.blocks[l]);
    const auto last = c.cover.intervals.begin() +
                      static_cast<std::ptrdiff_t>(c.cover.blocks[l + 1]);
    FlatPolynomial poly =
        flat_polynomial(scales, std::vector<Interval>(first, last), window_lo);
    poly.stage = l + 1;
    window_lo = poly.window_hi;
    c.polys.push_back(std::move(poly));
  }
  std::vector<std::size_t> alphas{0};
  for (const FlatPolynomial& poly : c.polys) {
    alphas.push_back(poly.window_hi);
  }
  c.plan = select_exponents(scales, alphas);
  c.spectrum = assemble(scales, c.plan, c.polys);
  return c;
}

DivergenceReport divergence_gap(const ScaleSequence& scales,
                                const Construction& construction,
                                std::size_t stage, const GroupPoint& x) {
  if (stage < 1 || stage > construction.polys.size()) {
    throw std::invalid_argument("stage out of range");
  }
  const RadixSequence& m = scales.radix();
  const ExponentPlan& plan = construction.plan;
  const SparseSpectrum& f = construction.spectrum;
  const std::size_t l = stage - 1;

  DivergenceReport report;
  report.stage = stage;
  const BigInt hi_base = scales.at(plan.alphas[l + 1]) + scales.at(plan.betas[l + 1]);
  report.n_lo = scales.at(plan.alphas[l]) + scales.at(plan.betas[l + 1]);
  report.n_hi = hi_base * hi_base * hi_base;

  const SpectralIndex modulation =
      SpectralIndex::from_digits(scales, {{plan.betas[l + 1], 1}});
  report.term_i =
      character(m, modulation, x) * construction.polys[l].evaluate(m, x);

  const auto [window_lo, window_hi] = stage_window(scales, plan, l);
  double stage_mass = 0.0;
  BigInt stage_max = 0;
  for (auto it = f.lower_bound(window_lo);
       it != f.end() && it->first.value() < window_hi; ++it) {
    report.term_ii += to_double(BigRat(it->first.value(), report.n_hi)) *
                      it->second * character(m, it->first, x);
    stage_mass += std::abs(it->second);
    stage_max = it->first.value();
  }
  report.bound_ii = stage_mass * to_double(BigRat(stage_max, report.n_hi));

  if (l > 0) {
    double low_mass = 0.0;
    BigInt low_max = 0;
    for (auto it = f.begin();
         it != f.end() && it->first.value() < window_lo; ++it) {
      const BigRat weight = BigRat(it->first.value(), report.n_lo) -
                            BigRat(it->first.value(), report.n_hi);
      report.term_iii +=
          to_double(weight) * it->second * character(m, it->first, x);
      low_mass += std::abs(it->second);
      low_max = it->first.value();
    }
    report.bound_iii =
        low_mass * to_double(BigRat(low_max, report.n_lo) -
                             BigRat(low_max, report.n_hi));
  }

  report.sigma_lo = fejer_mean(m, f, report.n_lo, x);
  report.sigma_hi = fejer_mean(m, f, report.n_hi, x);
  report.gap = std::abs(report.sigma_hi - report.sigma_lo);
  report.certified = report.gap >= 1.0 - report.bound_ii - report.bound_iii;
  return report;
}

bool DivergenceTable::all_certified() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const DivergenceReport& r) { return r.certified; });
}

DivergenceTable verify_divergence(const ScaleSequence& scales,
                                  const NullSetSpec& set) {
  DivergenceTable table;
  table.construction = build_construction(scales, set);
  const std::size_t depth = table.construction.plan.betas.back() + 1;
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    const GroupPoint x = set.points[i].realize(depth);
    for (std::size_t stage = 1; stage <= table.construction.polys.size();
         ++stage) {
      DivergenceReport report =
          divergence_gap(scales, table.construction, stage, x);
      report.point = i;
      table.reports.push_back(std::move(report));
    }
  }
  return table;
}

void require_certified(const DivergenceTable& table) {
  for (const DivergenceReport& r : table.reports) {
    if (!r.certified) {
      throw CertificateFailure("gap certificate fails at stage " +
                               std::to_string(r.stage) + ", point " +
                               std::to_string(r.point));
    }
  }
}

}  // namespace vilenkin
