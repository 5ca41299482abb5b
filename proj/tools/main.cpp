#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vilenkin/divergence.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/sampled.hpp"
#include "vilenkin/transform.hpp"

namespace {

using namespace vilenkin;

struct GlobalOptions {
  std::string spec_path;
  std::string out_dir = ".";
  bool verify_only = false;
};

ExperimentSpec load_spec(const GlobalOptions& global) {
  if (global.spec_path.empty()) {
    throw std::invalid_argument("--spec is required for this command");
  }
  return load_experiment(global.spec_path);
}

std::string artifact_path(const GlobalOptions& global, const char* name) {
  return (std::filesystem::path(global.out_dir) / name).string();
}

void emit(const GlobalOptions& global, const char* name,
          const std::string& content) {
  std::filesystem::create_directories(global.out_dir);
  const std::string path = artifact_path(global, name);
  write_file(path, content);
  std::cout << "wrote " << path << '\n';
}

int cmd_kernels(const GlobalOptions& global, std::size_t depth,
                const std::string& kind_name, const std::string& n_text) {
  const ExperimentSpec spec = load_spec(global);
  const ScaleSequence scales(spec.radix);
  if (scales.at(depth) > 100'000) {
    throw std::invalid_argument("table depth exceeds the 1e5-cell guard");
  }
  const BigInt n = parse_decimal(n_text);
  if (n < 1 || n > kKernelSumGuard) {
    throw std::invalid_argument("n must lie in [1, 1e6]");
  }
  const KernelKind kind =
      kind_name == "fejer" ? KernelKind::fejer : KernelKind::dirichlet;
  const SampledFunction table = kernel_table(scales, depth, kind, n);
  if (kind == KernelKind::dirichlet) {
    for (std::size_t j = 0; j <= depth; ++j) {
      if (scales.at(j) != n) {
        continue;
      }
      for (std::size_t cell = 0; cell < table.values.size(); ++cell) {
        const auto closed = paley_dirichlet(
            scales, j, point_of_cell(spec.radix, depth, cell));
        if (std::abs(table.values[cell] - closed) > 1e-10) {
          throw std::runtime_error("closed-form cross-check failed at cell " +
                                   std::to_string(cell));
        }
      }
      std::cout << "closed_form_check=ok\n";
    }
  }
  emit(global, "kernels.csv", cells_csv(table.values));
  return 0;
}

int cmd_transform(const GlobalOptions& global, const std::string& input_path,
                  bool roundtrip) {
  const ExperimentSpec spec = load_spec(global);
  const ScaleSequence scales(spec.radix);
  std::ifstream in(input_path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + input_path);
  }
  SampledFunction f;
  f.values = read_samples(in);
  const auto level = scales.level_of(BigInt(f.values.size()));
  if (!level) {
    throw std::invalid_argument(
        "sample count " + std::to_string(f.values.size()) +
        " is not a scale value M_N of the given radix sequence");
  }
  f.level = *level;
  const std::vector<std::complex<double>> coefficients = forward(scales, f);
  emit(global, "coefficients.csv", cells_csv(coefficients));
  if (roundtrip) {
    const SampledFunction back = inverse(scales, f.level, coefficients);
    double error = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      error = std::max(error, std::abs(back.values[i] - f.values[i]));
    }
    std::cout << "roundtrip_max_error=" << format_double(error) << '\n';
  }
  return 0;
}

void check_flatness(const ScaleSequence& scales, const Construction& c,
                    double p) {
  const std::size_t level = c.plan.alphas.back();
  for (const FlatPolynomial& poly : c.polys) {
    const SampledFunction dense = to_sampled(scales, poly.spectrum, level);
    const double mass = std::pow(lp_norm(dense, p), p);
    const double expected = to_double(total_measure(scales, poly.support));
    if (std::abs(mass - expected) > 1e-9) {
      throw CertificateFailure("flatness norm check fails at stage " +
                               std::to_string(poly.stage));
    }
  }
}

int cmd_construct(const GlobalOptions& global) {
  const ExperimentSpec spec = load_spec(global);
  const ScaleSequence scales(spec.radix);
  const DivergenceTable table = verify_divergence(scales, spec.nullset);
  check_flatness(scales, table.construction, spec.p);

  const std::string plan_text = dump_json(plan_to_json(table.construction));
  const std::string spectrum_text =
      dump_json(spectrum_to_json(table.construction.spectrum));
  const std::string report_text = report_csv(table.reports);

  if (global.verify_only) {
    const std::string stored_plan = read_file(artifact_path(global, "plan.json"));
    const StoredPlan parsed =
        plan_from_json(spec.radix, nlohmann::json::parse(stored_plan));
    try {
      validate_plan(scales, parsed.plan);
    } catch (const std::exception& e) {
      throw CertificateFailure(std::string("stored plan fails re-checking: ") +
                               e.what());
    }
    const std::pair<const char*, const std::string*> artifacts[] = {
        {"plan.json", &plan_text},
        {"spectrum.json", &spectrum_text},
        {"report.csv", &report_text}};
    for (const auto& [name, fresh] : artifacts) {
      if (read_file(artifact_path(global, name)) != *fresh) {
        throw CertificateFailure(std::string("stored ") + name +
                                 " differs from a fresh run");
      }
    }
    require_certified(table);
    std::cout << "verified " << global.out_dir << '\n';
    return 0;
  }

  emit(global, "plan.json", plan_text);
  emit(global, "spectrum.json", spectrum_text);
  emit(global, "report.csv", report_text);
  require_certified(table);
  return 0;
}

std::vector<std::uint32_t> parse_point(const std::string& text) {
  std::vector<std::uint32_t> digits;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string field =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    std::uint32_t digit = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), digit);
    if (ec != std::errc{} || end != field.data() + field.size() ||
        field.empty()) {
      throw std::invalid_argument("--point expects comma-separated digits");
    }
    digits.push_back(digit);
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return digits;
}

int cmd_trace(const GlobalOptions& global, const std::string& point_text) {
  const ExperimentSpec spec = load_spec(global);
  const ScaleSequence scales(spec.radix);
  PointRule target;
  target.prefix = parse_point(point_text);
  validate_rule(spec.radix, target);
  std::size_t match = spec.nullset.points.size();
  for (std::size_t i = 0; i < spec.nullset.points.size(); ++i) {
    if (same_sequence(target, spec.nullset.points[i])) {
      match = i;
      break;
    }
  }
  if (match == spec.nullset.points.size()) {
    throw std::invalid_argument("the given point is not in the covered set");
  }
  const Construction c = build_construction(scales, spec.nullset);
  const GroupPoint x =
      spec.nullset.points[match].realize(c.plan.betas.back() + 1);
  std::vector<std::pair<BigInt, double>> rows;
  for (std::size_t stage = 1; stage <= c.polys.size(); ++stage) {
    const DivergenceReport report = divergence_gap(scales, c, stage, x);
    rows.emplace_back(report.n_lo, std::abs(report.sigma_lo));
    rows.emplace_back(report.n_hi, std::abs(report.sigma_hi));
  }
  emit(global, "trace.csv", trace_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fejer-mean divergence constructions on bounded Vilenkin groups"};
  GlobalOptions global;
  app.add_option("--spec", global.spec_path, "experiment spec (JSON)");
  app.add_option("--out", global.out_dir, "output directory")
      ->capture_default_str();
  app.add_flag("--verify-only", global.verify_only,
               "re-check stored artifacts instead of writing");
  app.require_subcommand(1);

  std::size_t depth = 0;
  std::string kind = "dirichlet";
  std::string n_text;
  CLI::App* kernels = app.add_subcommand("kernels", "tabulate a kernel");
  kernels->fallthrough();
  kernels->add_option("--depth", depth, "table depth N (rows = M_N cells)")
      ->required();
  kernels->add_option("--kind", kind, "dirichlet or fejer")
      ->check(CLI::IsMember({"dirichlet", "fejer"}));
  kernels->add_option("--n", n_text, "kernel order (decimal)")->required();

  std::string input_path;
  bool roundtrip = false;
  CLI::App* transform =
      app.add_subcommand("transform", "forward transform of sampled data");
  transform->fallthrough();
  transform->add_option("--input", input_path, "samples CSV: re[,im] rows")
      ->required();
  transform->add_flag("--roundtrip", roundtrip,
                      "re-invert and print the max error");

  CLI::App* construct = app.add_subcommand(
      "construct", "build a divergence construction and certify it");
  construct->fallthrough();

  std::string point_text;
  CLI::App* trace = app.add_subcommand(
      "trace", "Fejer-mean oscillation trace at a covered point");
  trace->fallthrough();
  trace->add_option("--point", point_text, "comma-separated digits")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kernels->parsed()) {
      return cmd_kernels(global, depth, kind, n_text);
    }
    if (transform->parsed()) {
      return cmd_transform(global, input_path, roundtrip);
    }
    if (construct->parsed()) {
      return cmd_construct(global);
    }
    return cmd_trace(global, point_text);
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
