#include "vilenkin/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vilenkin/index.hpp"

namespace vilenkin {

namespace {

void require_keys(const nlohmann::json& j,
                  std::initializer_list<std::string_view> allowed,
                  const std::string& where) {
  if (!j.is_object()) {
    throw std::invalid_argument(where + " must be a JSON object");
  }
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      throw std::invalid_argument("unknown field \"" + item.key() + "\" in " +
                                  where);
    }
  }
}

std::vector<std::uint32_t> digit_list(const nlohmann::json& j,
                                      const std::string& where) {
  if (!j.is_array()) {
    throw std::invalid_argument(where + " must be an array");
  }
  std::vector<std::uint32_t> digits;
  digits.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number_unsigned()) {
      throw std::invalid_argument(where +
                                  " entries must be non-negative integers");
    }
    const std::uint64_t v = entry.get<std::uint64_t>();
    if (v > 0xffffffffull) {
      throw std::invalid_argument(where + " entry out of range");
    }
    digits.push_back(static_cast<std::uint32_t>(v));
  }
  return digits;
}

std::vector<std::size_t> size_list(const nlohmann::json& j,
                                   const std::string& where) {
  if (!j.is_array()) {
    throw std::invalid_argument(where + " must be an array");
  }
  std::vector<std::size_t> values;
  values.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number_unsigned()) {
      throw std::invalid_argument(where +
                                  " entries must be non-negative integers");
    }
    values.push_back(entry.get<std::size_t>());
  }
  return values;
}

PointRule point_from_json(const nlohmann::json& j, const std::string& where) {
  PointRule rule;
  if (j.is_array()) {
    rule.prefix = digit_list(j, where);
    return rule;
  }
  require_keys(j, {"prefix", "period"}, where);
  if (j.contains("prefix")) {
    rule.prefix = digit_list(j.at("prefix"), where + ".prefix");
  }
  if (j.contains("period")) {
    rule.period = digit_list(j.at("period"), where + ".period");
  }
  return rule;
}

double number_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) {
    throw std::invalid_argument(where + " must be a number");
  }
  return j.get<double>();
}

}  // namespace

namespace {

double flush_negative_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", flush_negative_zero(v));
  return buffer;
}

ExperimentSpec parse_experiment(const nlohmann::json& j) {
  require_keys(j, {"radix", "points", "stages", "p"}, "experiment spec");
  if (!j.contains("radix")) {
    throw std::invalid_argument("experiment spec needs a \"radix\" field");
  }
  ExperimentSpec spec;
  spec.radix = radix_from_json(j.at("radix"));
  if (j.contains("points")) {
    const nlohmann::json& points = j.at("points");
    if (!points.is_array()) {
      throw std::invalid_argument("points must be an array");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      spec.nullset.points.push_back(
          point_from_json(points[i], "points[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("stages")) {
    if (!j.at("stages").is_number_unsigned()) {
      throw std::invalid_argument("stages must be a non-negative integer");
    }
    spec.nullset.stages = j.at("stages").get<std::size_t>();
  }
  if (j.contains("p")) {
    spec.p = number_field(j.at("p"), "p");
    if (!(spec.p >= 1.0)) {
      throw std::invalid_argument("p must be at least 1");
    }
  }
  return spec;
}

ExperimentSpec load_experiment(const std::string& path) {
  return parse_experiment(nlohmann::json::parse(read_file(path)));
}

nlohmann::json radix_to_json(const RadixSequence& m) {
  return {{"prefix", m.prefix()}, {"period", m.period()}};
}

RadixSequence radix_from_json(const nlohmann::json& j) {
  require_keys(j, {"prefix", "period"}, "radix");
  if (!j.contains("period")) {
    throw std::invalid_argument("radix needs a \"period\" field");
  }
  std::vector<std::uint32_t> prefix;
  if (j.contains("prefix")) {
    prefix = digit_list(j.at("prefix"), "radix.prefix");
  }
  return {std::move(prefix), digit_list(j.at("period"), "radix.period")};
}

nlohmann::json spectrum_to_json(const SparseSpectrum& f) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [index, amplitude] : f) {
    entries.push_back({{"index", to_decimal(index.value())},
                       {"re", flush_negative_zero(amplitude.real())},
                       {"im", flush_negative_zero(amplitude.imag())}});
  }
  return {{"entries", std::move(entries)}};
}

SparseSpectrum spectrum_from_json(const ScaleSequence& scales,
                                  const nlohmann::json& j) {
  require_keys(j, {"entries"}, "spectrum");
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw std::invalid_argument("spectrum needs an \"entries\" array");
  }
  SparseSpectrum f;
  for (const auto& entry : j.at("entries")) {
    require_keys(entry, {"index", "re", "im"}, "spectrum entry");
    if (!entry.contains("index") || !entry.at("index").is_string()) {
      throw std::invalid_argument("spectrum entry needs a decimal index");
    }
    const SpectralIndex index = SpectralIndex::from_value(
        scales, parse_decimal(entry.at("index").get<std::string>()));
    if (f.contains(index.value())) {
      throw std::invalid_argument("duplicate spectrum index " +
                                  entry.at("index").get<std::string>());
    }
    const double re = number_field(entry.at("re"), "spectrum entry re");
    const double im = number_field(entry.at("im"), "spectrum entry im");
    f.set(index, {re, im});
  }
  return f;
}

nlohmann::json plan_to_json(const Construction& construction) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const Interval& interval : construction.cover.intervals) {
    intervals.push_back({{"anchor", interval.anchor().digits}});
  }
  return {{"alphas", construction.plan.alphas},
          {"betas", construction.plan.betas},
          {"blocks", construction.cover.blocks},
          {"intervals", std::move(intervals)}};
}

StoredPlan plan_from_json(const RadixSequence& m, const nlohmann::json& j) {
  require_keys(j, {"alphas", "betas", "blocks", "intervals"}, "plan");
  for (const char* field : {"alphas", "betas", "blocks", "intervals"}) {
    if (!j.contains(field)) {
      throw std::invalid_argument(std::string("plan needs a \"") + field +
                                  "\" field");
    }
  }
  StoredPlan stored;
  stored.plan.alphas = size_list(j.at("alphas"), "plan.alphas");
  stored.plan.betas = size_list(j.at("betas"), "plan.betas");
  stored.blocks = size_list(j.at("blocks"), "plan.blocks");
  for (const auto& entry : j.at("intervals")) {
    require_keys(entry, {"anchor"}, "plan interval");
    if (!entry.contains("anchor")) {
      throw std::invalid_argument("plan interval needs an \"anchor\" field");
    }
    GroupPoint anchor{digit_list(entry.at("anchor"), "plan interval anchor")};
    const std::size_t depth = anchor.digits.size();
    stored.intervals.emplace_back(m, std::move(anchor), depth);
  }
  return stored;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string report_csv(const std::vector<DivergenceReport>& reports) {
  std::string out =
      "stage,point,n_lo,n_hi,abs_I,abs_II,abs_III,bound_II,bound_III,gap\n";
  for (const DivergenceReport& r : reports) {
    out += std::to_string(r.stage) + ',' + std::to_string(r.point) + ',' +
           to_decimal(r.n_lo) + ',' + to_decimal(r.n_hi) + ',' +
           format_double(std::abs(r.term_i)) + ',' +
           format_double(std::abs(r.term_ii)) + ',' +
           format_double(std::abs(r.term_iii)) + ',' +
           format_double(r.bound_ii) + ',' + format_double(r.bound_iii) + ',' +
           format_double(r.gap) + '\n';
  }
  return out;
}

std::string trace_csv(const std::vector<std::pair<BigInt, double>>& rows) {
  std::string out = "n,abs_sigma\n";
  for (const auto& [n, value] : rows) {
    out += to_decimal(n) + ',' + format_double(value) + '\n';
  }
  return out;
}

std::string cells_csv(const std::vector<std::complex<double>>& values) {
  std::string out = "cell_index,re,im\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i) + ',' + format_double(values[i].real()) + ',' +
           format_double(values[i].imag()) + '\n';
  }
  return out;
}

namespace {

double parse_field(std::string_view field, std::size_t line) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) {
    ++first;
  }
  while (last != first && (last[-1] == ' ' || last[-1] == '\t')) {
    --last;
  }
  double value = 0.0;
  const auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last || first == last) {
    throw std::invalid_argument("malformed number on sample line " +
                                std::to_string(line));
  }
  return value;
}

}  // namespace

std::vector<std::complex<double>> read_samples(std::istream& in) {
  std::vector<std::complex<double>> samples;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    if (line_number == 1) {
      try {
        parse_field(fields[0], line_number);
      } catch (const std::invalid_argument&) {
        continue;
      }
    }
    if (fields.size() > 2) {
      throw std::invalid_argument("too many fields on sample line " +
                                  std::to_string(line_number));
    }
    const double re = parse_field(fields[0], line_number);
    const double im =
        fields.size() == 2 ? parse_field(fields[1], line_number) : 0.0;
    samples.emplace_back(re, im);
  }
  return samples;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

}  // namespace vilenkin
