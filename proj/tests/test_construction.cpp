#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "vilenkin/bigint.hpp"
#include "vilenkin/cover.hpp"
#include "vilenkin/divergence.hpp"
#include "vilenkin/flat.hpp"
#include "vilenkin/nullset.hpp"
#include "vilenkin/plan.hpp"
#include "vilenkin/sampled.hpp"
#include "vilenkin/spectrum.hpp"

using namespace vilenkin;

namespace {

const RadixSequence walsh = RadixSequence::constant(2);
const RadixSequence mixed({}, {2, 3});

NullSetSpec origin_only(std::size_t stages) {
  return {{PointRule{{0}, {}}}, stages};
}

NullSetSpec two_points(std::size_t stages) {
  return {{PointRule{{0}, {}}, PointRule{{1}, {}}}, stages};
}

}  // namespace

TEST_CASE("point rules compare as digit sequences") {
  CHECK(same_sequence(PointRule{{1, 0}, {0}}, PointRule{{1}, {0, 0}}));
  CHECK(same_sequence(PointRule{{0}, {}}, PointRule{{}, {}}));
  CHECK(same_sequence(PointRule{{}, {1, 0, 1, 0}}, PointRule{{1}, {0, 1}}));
  CHECK_FALSE(same_sequence(PointRule{{0}, {}}, PointRule{{1}, {}}));
  CHECK_FALSE(same_sequence(PointRule{{}, {1}}, PointRule{{1}, {}}));

  CHECK_NOTHROW(validate_rule(walsh, PointRule{{1}, {0, 1}}));
  CHECK_THROWS_AS(validate_rule(walsh, PointRule{{2}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_rule(mixed, PointRule{{}, {2}}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_rule(mixed, PointRule{{}, {1, 2}}));

  CHECK_NOTHROW(validate_nullset(walsh, two_points(2)));
  CHECK_THROWS_AS(validate_nullset(walsh, NullSetSpec{{}, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_nullset(walsh, NullSetSpec{{PointRule{}}, 0}),
                  std::invalid_argument);
  const NullSetSpec dup{{PointRule{{0}, {}}, PointRule{{}, {0, 0}}}, 1};
  CHECK_THROWS_AS(validate_nullset(walsh, dup), std::invalid_argument);
}

TEST_CASE("covers pick canonical stage depths") {
  const ScaleSequence ws(walsh);

  const CoverSchedule single = build_cover(ws, origin_only(1));
  REQUIRE(single.intervals.size() == 1);
  CHECK(single.intervals[0].depth() == 1);
  CHECK(single.blocks == std::vector<std::size_t>{0, 1});
  CHECK_NOTHROW(validate_cover(ws, single, origin_only(1)));

  const CoverSchedule two_stage = build_cover(ws, origin_only(2));
  REQUIRE(two_stage.intervals.size() == 2);
  CHECK(two_stage.intervals[0].depth() == 1);
  CHECK(two_stage.intervals[1].depth() == 2);
  CHECK(two_stage.blocks == std::vector<std::size_t>{0, 1, 2});
  CHECK(tail_measure(ws, two_stage.intervals, 0) == BigRat(3, 4));
  CHECK(tail_measure(ws, two_stage.intervals, 1) == BigRat(1, 4));

  const NullSetSpec pair = two_points(2);
  const CoverSchedule both = build_cover(ws, pair);
  CHECK(both.blocks == std::vector<std::size_t>{0, 2, 4});
  for (std::size_t j = 0; j < both.stages(); ++j) {
    for (const PointRule& rule : pair.points) {
      bool covered = false;
      for (std::size_t i = both.blocks[j]; i < both.blocks[j + 1]; ++i) {
        const Interval& interval = both.intervals[i];
        covered = covered || interval.contains(rule.realize(interval.depth()));
      }
      CHECK(covered);
    }
  }
  CHECK_NOTHROW(validate_cover(ws, both, pair));

  const ScaleSequence ms(mixed);
  const CoverSchedule mixed_cover = build_cover(ms, origin_only(2));
  REQUIRE(mixed_cover.intervals.size() == 2);
  CHECK(mixed_cover.intervals[0].depth() == 1);
  CHECK(mixed_cover.intervals[1].depth() == 2);

  CHECK_THROWS_AS(build_cover(ws, NullSetSpec{{}, 1}), std::invalid_argument);
}

TEST_CASE("block boundaries are greedy-minimal") {
  const ScaleSequence ws(walsh);

  const std::vector<Interval> one{Interval(walsh, zero_point(1), 1)};
  CHECK(select_blocks(ws, one, 1) == std::vector<std::size_t>{0, 1});

  std::vector<Interval> geometric;
  for (std::size_t d = 2; d <= 5; ++d) {
    GroupPoint anchor = zero_point(d);
    anchor.digits[d - 1] = 1;
    geometric.emplace_back(walsh, anchor, d);
  }
  REQUIRE(tail_measure(ws, geometric, 0) == BigRat(15, 32));
  const auto blocks = select_blocks(ws, geometric, 2);
  CHECK(blocks == std::vector<std::size_t>{0, 1, 4});
  CHECK(tail_measure(ws, geometric, 1) < BigRat(1, 2));

  CHECK_THROWS_AS(select_blocks(ws, {}, 1), std::runtime_error);
  const std::vector<Interval> whole{Interval(walsh, zero_point(0), 0)};
  CHECK_THROWS_AS(select_blocks(ws, whole, 1), std::runtime_error);
}

TEST_CASE("flat polynomials are unimodular on their support") {
  const ScaleSequence ws(walsh);

  const FlatPolynomial whole =
      flat_polynomial(ws, {Interval(walsh, zero_point(0), 0)}, 0);
  CHECK(whole.spectrum.size() == 1);
  CHECK(whole.spectrum.amplitude(BigInt(1)) == std::complex<double>(1.0));
  CHECK(whole.window_lo == 0);
  CHECK(whole.window_hi == 1);

  const FlatPolynomial half =
      flat_polynomial(ws, {Interval(walsh, zero_point(1), 1)}, 0);
  CHECK(half.spectrum.size() == 2);
  CHECK(half.spectrum.amplitude(BigInt(2)) == std::complex<double>(0.5));
  CHECK(half.spectrum.amplitude(BigInt(3)) == std::complex<double>(0.5));
  const SampledFunction half_dense = to_sampled(ws, half.spectrum, 3);
  CHECK(lp_norm(half_dense, 2.0) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  const FlatPolynomial pair = flat_polynomial(
      ws,
      {Interval(walsh, zero_point(2), 2), Interval(walsh, GroupPoint{{1, 0}}, 2)},
      0);
  CHECK(pair.spectrum.size() == 2);
  CHECK(pair.spectrum.amplitude(BigInt(4)) == std::complex<double>(0.5));
  CHECK(pair.spectrum.amplitude(BigInt(6)) == std::complex<double>(0.5));

  std::mt19937_64 gen(9001);
  for (const RadixSequence& m : {walsh, mixed}) {
    const ScaleSequence scales(m);
    const GroupPoint anchor = oracle::random_point(gen, m, 2);
    const FlatPolynomial poly =
        flat_polynomial(scales, {Interval(m, anchor, 2)}, 1);
    CHECK(poly.window_lo == 1);
    for (const auto& [index, amplitude] : poly.spectrum) {
      CHECK(index.value() >= scales.at(poly.window_lo));
      CHECK(index.value() < scales.at(poly.window_hi));
    }

    const std::size_t level = poly.window_hi;
    const SampledFunction dense = to_sampled(scales, poly.spectrum, level);
    for (std::size_t cell = 0; cell < dense.values.size(); ++cell) {
      const GroupPoint x = point_of_cell(m, level, cell);
      const auto direct = poly.evaluate(m, x);
      CHECK(std::abs(dense.values[cell] - direct) < 1e-10);
      if (member_of_union(poly.support, x)) {
        CHECK(std::abs(std::abs(direct) - 1.0) < 1e-9);
      } else {
        CHECK(direct == std::complex<double>(0.0));
      }
    }

    const double mu = to_double(total_measure(scales, poly.support));
    for (const double p : {1.0, 2.0, 4.0}) {
      CHECK(std::abs(std::pow(lp_norm(dense, p), p) - mu) < 1e-9);
    }
  }

  CHECK_THROWS_AS(flat_polynomial(ws, {}, 0), std::invalid_argument);
}

TEST_CASE("exponent searches match the longhand scan") {
  const ScaleSequence ws(walsh);
  CHECK(next_beta(ws, 2, 10, 3) == 11);
  CHECK(next_beta(ws, 2, 10, 3) == oracle::brute_next_beta(ws, 2, 10, 3));
  CHECK_THROWS_AS(next_beta(ws, 3, 10, 3), std::invalid_argument);

  std::mt19937_64 gen(9002);
  for (const RadixSequence& m : {walsh, mixed}) {
    const ScaleSequence scales(m);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t a = std::uniform_int_distribution<std::size_t>(0, 6)(gen);
      const std::size_t a1 =
          a + std::uniform_int_distribution<std::size_t>(1, 6)(gen);
      const std::size_t b =
          a + std::uniform_int_distribution<std::size_t>(1, 8)(gen);
      const std::size_t found = next_beta(scales, a, a1, b);
      CHECK(found == oracle::brute_next_beta(scales, a, a1, b));
      CHECK(chain_holds(scales, a, a1, b, found));
    }
  }
}

TEST_CASE("exponent plans reproduce the shipped ladders") {
  const ScaleSequence ws(walsh);
  const ExponentPlan j2 = select_exponents(ws, {0, 2, 3});
  CHECK(j2.betas == std::vector<std::size_t>{1, 5, 16});
  CHECK_NOTHROW(validate_plan(ws, j2));

  const ExponentPlan j3 = select_exponents(ws, {0, 2, 3, 4});
  CHECK(j3.betas == std::vector<std::size_t>{1, 5, 16, 49});
  CHECK(ws.at(49) == BigInt(1) << 49);

  const ExponentPlan pair = select_exponents(ws, {0, 3, 4});
  CHECK(pair.betas == std::vector<std::size_t>{1, 5, 16});

  const ScaleSequence ms(mixed);
  const ExponentPlan mj2 = select_exponents(ms, {0, 2, 3});
  CHECK(mj2.betas == std::vector<std::size_t>{1, 4, 13});

  ExponentPlan broken = j2;
  broken.betas[2] = 15;
  CHECK_THROWS_AS(validate_plan(ws, broken), std::runtime_error);
  CHECK_THROWS_AS(select_exponents(ws, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(select_exponents(ws, {0}), std::invalid_argument);
}

TEST_CASE("assembly shifts each block into its own window") {
  const ScaleSequence ws(walsh);

  const Construction single = build_construction(ws, origin_only(1));
  CHECK(single.plan.alphas == std::vector<std::size_t>{0, 2});
  CHECK(single.plan.betas == std::vector<std::size_t>{1, 5});
  CHECK(single.spectrum.size() == 2);
  CHECK(single.spectrum.amplitude(BigInt(34)) == std::complex<double>(0.5));
  CHECK(single.spectrum.amplitude(BigInt(35)) == std::complex<double>(0.5));

  const Construction walsh2 = build_construction(ws, origin_only(2));
  CHECK(walsh2.plan.alphas == std::vector<std::size_t>{0, 2, 3});
  std::size_t total = 0;
  for (const FlatPolynomial& poly : walsh2.polys) {
    total += poly.spectrum.size();
  }
  CHECK(walsh2.spectrum.size() == total);
  for (std::size_t key : {65540, 65541, 65542, 65543}) {
    CHECK(walsh2.spectrum.amplitude(BigInt(key)) ==
          std::complex<double>(0.25));
  }
  for (const auto& [index, amplitude] : walsh2.spectrum) {
    bool inside = false;
    for (std::size_t l = 0; l < walsh2.plan.stages(); ++l) {
      const BigInt lo =
          ws.at(walsh2.plan.betas[l + 1]) + ws.at(walsh2.plan.alphas[l]);
      const BigInt hi =
          ws.at(walsh2.plan.betas[l + 1]) + ws.at(walsh2.plan.alphas[l + 1]);
      inside = inside || (lo <= index.value() && index.value() < hi);
    }
    CHECK(inside);
  }
}

TEST_CASE("the case split agrees with the assembled spectrum") {
  std::mt19937_64 gen(9003);
  for (const RadixSequence& m : {walsh, mixed}) {
    const ScaleSequence scales(m);
    const Construction built = build_construction(scales, origin_only(2));
    for (const auto& [index, amplitude] : built.spectrum) {
      CHECK(coefficient_case_split(scales, index, built.plan, built.polys) ==
            amplitude);
    }
    const BigInt top = scales.at(built.plan.betas.back() + 1);
    for (int trial = 0; trial < 400; ++trial) {
      BigInt k = parse_decimal(oracle::random_decimal(gen, 12));
      k = k % top;
      if (built.spectrum.contains(k)) {
        continue;
      }
      const auto value = coefficient_case_split(
          scales, SpectralIndex::from_value(scales, k), built.plan,
          built.polys);
      CHECK(value == std::complex<double>(0.0));
    }
  }
}

TEST_CASE("walsh divergence certificates hit the frozen numbers") {
  const ScaleSequence ws(walsh);
  const DivergenceTable table = verify_divergence(ws, origin_only(2));
  REQUIRE(table.reports.size() == 2);
  CHECK_NOTHROW(require_certified(table));
  CHECK(table.all_certified());

  const DivergenceReport& first = table.reports[0];
  CHECK(first.stage == 1);
  CHECK(first.n_lo == 33);
  CHECK(first.n_hi == 46656);
  CHECK(std::abs(std::abs(first.term_i) - 1.0) < 1e-9);
  CHECK(first.bound_ii == doctest::Approx(7.5017e-4).epsilon(1e-3));
  CHECK(first.bound_iii == 0.0);
  CHECK(first.gap == doctest::Approx(0.99926).epsilon(1e-4));
  CHECK(first.gap >= 1.0 - first.bound_ii - first.bound_iii);
  CHECK(first.gap > 0.5);

  const DivergenceReport& second = table.reports[1];
  CHECK(second.stage == 2);
  CHECK(second.n_lo == 65540);
  CHECK(second.n_hi == BigInt(65544) * 65544 * 65544);
  CHECK(second.bound_iii == doctest::Approx(5.3403e-4).epsilon(1e-3));
  CHECK(second.gap == doctest::Approx(1.00053).epsilon(1e-4));
  CHECK(second.bound_ii + second.bound_iii < first.bound_ii + first.bound_iii);

  for (const DivergenceReport& report : table.reports) {
    const auto recombined =
        report.term_i - report.term_ii + report.term_iii;
    CHECK(std::abs((report.sigma_hi - report.sigma_lo) - recombined) < 1e-9);
    CHECK(std::abs(report.term_ii) <= report.bound_ii + 1e-15);
    CHECK(std::abs(report.term_iii) <= report.bound_iii + 1e-15);
  }

  const DivergenceTable shallow = verify_divergence(ws, origin_only(1));
  CHECK(shallow.reports.size() == 1);
  CHECK(shallow.all_certified());
}

TEST_CASE("two-point and mixed-radix certificates also close") {
  const ScaleSequence ws(walsh);
  const DivergenceTable pair = verify_divergence(ws, two_points(2));
  REQUIRE(pair.reports.size() == 4);
  CHECK(pair.all_certified());
  CHECK(pair.reports[0].n_lo == 33);
  CHECK(pair.reports[0].n_hi == 64000);
  CHECK(pair.reports[1].n_lo == 65544);
  CHECK(pair.reports[1].n_hi == BigInt(65552) * 65552 * 65552);
  CHECK(pair.reports[0].n_lo == pair.reports[2].n_lo);
  CHECK(pair.reports[1].n_hi == pair.reports[3].n_hi);

  const ScaleSequence ms(mixed);
  const DivergenceTable mixed_table = verify_divergence(ms, origin_only(2));
  REQUIRE(mixed_table.reports.size() == 2);
  CHECK(mixed_table.all_certified());
  CHECK(mixed_table.reports[0].n_lo == 37);
  CHECK(mixed_table.reports[0].n_hi == 74088);
  CHECK(mixed_table.reports[1].n_lo == 93318);
  CHECK(mixed_table.reports[1].n_hi == BigInt(93324) * 93324 * 93324);
}

TEST_CASE("the oscillation identity holds away from the target set") {
  std::mt19937_64 gen(9004);
  const ScaleSequence ws(walsh);
  const Construction built = build_construction(ws, origin_only(2));
  const std::size_t horizon = built.plan.betas.back() + 1;
  for (int trial = 0; trial < 10; ++trial) {
    const GroupPoint x = oracle::random_point(gen, walsh, horizon);
    for (std::size_t stage = 1; stage <= 2; ++stage) {
      const DivergenceReport report = divergence_gap(ws, built, stage, x);
      const auto recombined =
          report.term_i - report.term_ii + report.term_iii;
      CHECK(std::abs((report.sigma_hi - report.sigma_lo) - recombined) <
            1e-9);
    }
  }
  CHECK_THROWS_AS(divergence_gap(ws, built, 0, zero_point(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(divergence_gap(ws, built, 3, zero_point(1)),
                  std::invalid_argument);
}

TEST_CASE("partial sums jump by one across window boundaries") {
  for (const RadixSequence& m : {walsh, mixed}) {
    const ScaleSequence scales(m);
    const NullSetSpec set = origin_only(2);
    const Construction built = build_construction(scales, set);
    const GroupPoint x = set.points[0].realize(built.plan.betas.back() + 1);
    for (std::size_t l = 0; l < built.plan.stages(); ++l) {
      const BigInt lo =
          scales.at(built.plan.betas[l + 1]) + scales.at(built.plan.alphas[l]);
      const BigInt hi = scales.at(built.plan.betas[l + 1]) +
                        scales.at(built.plan.alphas[l + 1]);
      const auto jump = partial_sum(m, built.spectrum, hi, x) -
                        partial_sum(m, built.spectrum, lo, x);
      CHECK(std::abs(std::abs(jump) - 1.0) < 1e-9);
    }
  }
}
