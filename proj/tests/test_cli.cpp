#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "vilenkin/bigint.hpp"
#include "vilenkin/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path capture =
      fs::path("cli_work") / ("capture_" + std::to_string(counter++) + ".txt");
  fs::create_directories(capture.parent_path());
  const std::string command = std::string("\"") + CLI_BIN + "\" " + args +
                              " > " + capture.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  result.code = WEXITSTATUS(status);
  result.output = vilenkin::read_file(capture.string());
  return result;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path("cli_work") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string demo(const char* name) {
  return (fs::path(DEMO_DIR) / name).string();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("construct writes certified artifacts deterministically") {
  const fs::path first = fresh_dir("construct_a");
  const RunResult a = run_cli("--spec " + demo("walsh_j2.json") + " --out " +
                              first.string() + " construct");
  CHECK(a.code == 0);
  for (const char* name : {"plan.json", "spectrum.json", "report.csv"}) {
    CHECK(fs::exists(first / name));
  }
  const auto report_lines =
      lines_of(vilenkin::read_file((first / "report.csv").string()));
  REQUIRE(report_lines.size() == 3);
  CHECK(report_lines[0] ==
        "stage,point,n_lo,n_hi,abs_I,abs_II,abs_III,bound_II,bound_III,gap");
  CHECK(report_lines[1].find("1,0,33,46656,") == 0);
  CHECK(report_lines[2].find("2,0,65540,281578068509184,") == 0);

  const fs::path second = fresh_dir("construct_b");
  const RunResult b = run_cli("--spec " + demo("walsh_j2.json") + " --out " +
                              second.string() + " construct");
  CHECK(b.code == 0);
  for (const char* name : {"plan.json", "spectrum.json", "report.csv"}) {
    CHECK(vilenkin::read_file((first / name).string()) ==
          vilenkin::read_file((second / name).string()));
  }

  const RunResult verified = run_cli("--spec " + demo("walsh_j2.json") +
                                     " --out " + first.string() +
                                     " --verify-only construct");
  CHECK(verified.code == 0);
  CHECK(verified.output.find("verified") != std::string::npos);
}

TEST_CASE("verify-only rejects tampered artifacts") {
  const fs::path dir = fresh_dir("tampered");
  REQUIRE(run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
                  " construct")
              .code == 0);

  const std::string plan_path = (dir / "plan.json").string();
  const std::string original = vilenkin::read_file(plan_path);
  std::string bent = original;
  const std::size_t at = bent.find("16");
  REQUIRE(at != std::string::npos);
  bent.replace(at, 2, "15");
  vilenkin::write_file(plan_path, bent);
  const RunResult broken_plan = run_cli("--spec " + demo("walsh_j2.json") +
                                        " --out " + dir.string() +
                                        " --verify-only construct");
  CHECK(broken_plan.code == 1);
  CHECK(broken_plan.output.find("certificate failure") != std::string::npos);

  vilenkin::write_file(plan_path, original);
  const std::string report_path = (dir / "report.csv").string();
  vilenkin::write_file(report_path,
                       vilenkin::read_file(report_path) + "9,9,9,9\n");
  const RunResult broken_report = run_cli("--spec " + demo("walsh_j2.json") +
                                          " --out " + dir.string() +
                                          " --verify-only construct");
  CHECK(broken_report.code == 1);
  CHECK(broken_report.output.find("report.csv") != std::string::npos);
}

TEST_CASE("construct covers multi-point and mixed-radix specs") {
  const fs::path pair_dir = fresh_dir("construct_pair");
  const RunResult pair = run_cli("--spec " + demo("two_point_j2.json") +
                                 " --out " + pair_dir.string() + " construct");
  CHECK(pair.code == 0);
  CHECK(lines_of(vilenkin::read_file((pair_dir / "report.csv").string()))
            .size() == 5);

  const fs::path mixed_dir = fresh_dir("construct_mixed");
  const RunResult mixed = run_cli("--spec " + demo("mixed_radix_j2.json") +
                                  " --out " + mixed_dir.string() +
                                  " construct");
  CHECK(mixed.code == 0);
  const auto rows =
      lines_of(vilenkin::read_file((mixed_dir / "report.csv").string()));
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].find("1,0,37,74088,") == 0);
}

TEST_CASE("malformed experiment specs exit with code 2") {
  const fs::path dir = fresh_dir("bad_specs");
  const std::string no_stage = (dir / "no_stages.json").string();
  vilenkin::write_file(no_stage,
                       "{\"radix\": {\"period\": [2]}, \"points\": [[0]], "
                       "\"stages\": 0}\n");
  CHECK(run_cli("--spec " + no_stage + " --out " + dir.string() + " construct")
            .code == 2);

  const std::string stray = (dir / "stray.json").string();
  vilenkin::write_file(stray, "{\"radix\": {\"period\": [2]}, \"odd\": 1}\n");
  CHECK(run_cli("--spec " + stray + " --out " + dir.string() + " construct")
            .code == 2);

  CHECK(run_cli("--out " + dir.string() + " construct").code == 2);
  CHECK(run_cli("--spec " + demo("walsh_j2.json")).code == 2);
}

TEST_CASE("kernel tables cross-check the closed form") {
  const fs::path dir = fresh_dir("kernels");
  const RunResult paley =
      run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
              " kernels --depth 3 --kind dirichlet --n 4");
  CHECK(paley.code == 0);
  CHECK(paley.output.find("closed_form_check=ok") != std::string::npos);
  const auto rows =
      lines_of(vilenkin::read_file((dir / "kernels.csv").string()));
  REQUIRE(rows.size() == 9);
  int tall = 0;
  int zero = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].find(",4,") != std::string::npos) {
      ++tall;
    }
    if (rows[i].find(",0,") != std::string::npos) {
      ++zero;
    }
  }
  CHECK(tall == 2);
  CHECK(zero == 6);

  const RunResult flat =
      run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
              " kernels --depth 2 --kind fejer --n 1");
  CHECK(flat.code == 0);
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(lines_of(vilenkin::read_file((dir / "kernels.csv").string()))[i] ==
          std::to_string(i - 1) + ",1,0");
  }

  CHECK(run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
                " kernels --depth 2 --kind fejer --n 2000000")
            .code == 2);
  CHECK(run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
                " kernels --depth 2 --kind dirichlet")
            .code == 2);
}

TEST_CASE("transform reports a tiny round-trip error") {
  const fs::path dir = fresh_dir("transform");
  const std::string samples = (dir / "constant.csv").string();
  std::string body = "re,im\n";
  for (int i = 0; i < 8; ++i) {
    body += "1,0\n";
  }
  vilenkin::write_file(samples, body);
  const RunResult ok =
      run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
              " transform --input " + samples + " --roundtrip");
  CHECK(ok.code == 0);
  const std::size_t tag = ok.output.find("roundtrip_max_error=");
  REQUIRE(tag != std::string::npos);
  const double error =
      std::stod(ok.output.substr(tag + std::string("roundtrip_max_error=").size()));
  CHECK(error < 1e-9);

  const auto rows =
      lines_of(vilenkin::read_file((dir / "coefficients.csv").string()));
  REQUIRE(rows.size() == 9);
  CHECK(rows[1] == "0,1,0");
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(rows[i] == std::to_string(i - 1) + ",0,0");
  }

  const std::string ragged = (dir / "ragged.csv").string();
  vilenkin::write_file(ragged, "1\n1\n1\n");
  CHECK(run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
                " transform --input " + ragged)
            .code == 2);
}

TEST_CASE("trace rows mirror the report oscillation") {
  const fs::path dir = fresh_dir("trace");
  const RunResult traced = run_cli("--spec " + demo("walsh_j2.json") +
                                   " --out " + dir.string() +
                                   " trace --point 0");
  CHECK(traced.code == 0);
  const auto rows = lines_of(vilenkin::read_file((dir / "trace.csv").string()));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "n,abs_sigma");
  CHECK(rows[1].find("33,") == 0);
  CHECK(rows[2].find("46656,") == 0);
  CHECK(rows[3].find("65540,") == 0);
  CHECK(rows[4].find("281578068509184,") == 0);
  const double lo = std::stod(rows[1].substr(3));
  const double hi = std::stod(rows[2].substr(6));
  CHECK(hi - lo > 0.99);

  CHECK(run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
                " trace --point 1")
            .code == 2);
  CHECK(run_cli("--spec " + demo("walsh_j2.json") + " --out " + dir.string() +
                " trace --point x")
            .code == 2);
}
