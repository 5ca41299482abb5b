#pragma once

#include <complex>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vilenkin/bigint.hpp"
#include "vilenkin/divergence.hpp"
#include "vilenkin/group.hpp"
#include "vilenkin/nullset.hpp"
#include "vilenkin/plan.hpp"
#include "vilenkin/radix.hpp"
#include "vilenkin/spectrum.hpp"

namespace vilenkin {

/// Round-trip-exact decimal form ("%.17g"), byte-stable across runs.
std::string format_double(double v);

/// Experiment description consumed by the command-line tools.
struct ExperimentSpec {
  RadixSequence radix = RadixSequence::constant(2);
  NullSetSpec nullset;
  double p = 2.0;
};

/// Strict schema {"radix": {"prefix"?, "period"}, "points"?, "stages"?, "p"?};
/// unknown fields anywhere are rejected. Point entries are either digit
/// arrays (eventually zero) or {"prefix"?, "period"?} rules.
ExperimentSpec parse_experiment(const nlohmann::json& j);
ExperimentSpec load_experiment(const std::string& path);

nlohmann::json radix_to_json(const RadixSequence& m);
RadixSequence radix_from_json(const nlohmann::json& j);

/// {"entries": [{"index": decimal string, "re", "im"}, ...]}, sorted by index.
nlohmann::json spectrum_to_json(const SparseSpectrum& f);
SparseSpectrum spectrum_from_json(const ScaleSequence& scales,
                                  const nlohmann::json& j);

/// Combinatorial data of a construction: exponents, block boundaries and the
/// interval cover, enough to re-check the chain offline.
struct StoredPlan {
  ExponentPlan plan;
  std::vector<std::size_t> blocks;
  std::vector<Interval> intervals;
};

nlohmann::json plan_to_json(const Construction& construction);
StoredPlan plan_from_json(const RadixSequence& m, const nlohmann::json& j);

/// Canonical serialized form used for files: two-space indent, trailing
/// newline. Key order is alphabetical, so equal data gives equal bytes.
std::string dump_json(const nlohmann::json& j);

std::string report_csv(const std::vector<DivergenceReport>& reports);
std::string trace_csv(const std::vector<std::pair<BigInt, double>>& rows);
std::string cells_csv(const std::vector<std::complex<double>>& values);

/// Sample rows `re[,im]`, one per line; an optional leading header line is
/// skipped. Throws on malformed numbers.
std::vector<std::complex<double>> read_samples(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace vilenkin
