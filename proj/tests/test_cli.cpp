#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "cli_commands.hpp"

namespace fs = std::filesystem;
using namespace se3tan::cli;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "se3tan_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("errors sweep: determinism, header, zero row") {
  const fs::path dir = temp_dir();
  SweepSpec spec;
  spec.s_min = 0.0;
  spec.s_max = 0.05;
  spec.samples = 6;
  spec.log_spacing = false;
  spec.targets = {"dexp", "ddexpinv"};

  const auto labels = cmd_errors(spec, (dir / "a.csv").string());
  cmd_errors(spec, (dir / "b.csv").string());
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(labels.size() == 4 + 3);

  std::ifstream in(dir / "a.csv");
  std::string header, first_row;
  std::getline(in, header);
  std::getline(in, first_row);
  CHECK(header == "s,dexp_k0,dexp_k1,dexp_k2,dexp_k3,ddexpinv_k0,ddexpinv_k1,ddexpinv_k3");
  // s = 0: every approximation is exact
  std::stringstream row(first_row);
  std::string cell;
  std::getline(row, cell, ',');
  CHECK(cell == "0");
  while (std::getline(row, cell, ',')) CHECK(std::stod(cell) == 0.0);
}

TEST_CASE("errors sweep rejects unknown targets") {
  SweepSpec spec;
  spec.targets = {"nonsense"};
  CHECK_THROWS_AS(cmd_errors(spec, (temp_dir() / "x.csv").string()), std::invalid_argument);
}

TEST_CASE("errors sweep shows the order layering at s = 1e-2") {
  const fs::path dir = temp_dir();
  SweepSpec spec;
  spec.s_min = 1e-2;
  spec.s_max = 1e-1;
  spec.samples = 2;
  spec.targets = {"ddexp"};
  cmd_errors(spec, (dir / "layer.csv").string());
  std::ifstream in(dir / "layer.csv");
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::stringstream ss(row);
  std::string cell;
  std::getline(ss, cell, ',');
  double prev = 1e300;
  while (std::getline(ss, cell, ',')) {
    const double e = std::stod(cell);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("rod study writes the expected files deterministically") {
  const fs::path dir = temp_dir() / "rod";
  const fs::path dir2 = temp_dir() / "rod_again";
  fs::remove_all(dir);
  fs::remove_all(dir2);
  RodCommandConfig config;
  config.tau_samples = 21;  // keep the unit test fast
  cmd_rod(config, dir.string());
  cmd_rod(config, dir2.string());
  for (const char* name : {"chi.csv", "chi_rates.csv", "potential.csv", "switching_error.csv"}) {
    CAPTURE(name);
    CHECK(fs::exists(dir / name));
    CHECK(fs::file_size(dir / name) > 100);
    CHECK(slurp(dir / name) == slurp(dir2 / name));
  }
  // chi.csv: robust and direct columns agree away from artifacts
  std::ifstream in(dir / "chi.csv");
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);  // tau = 0
  std::vector<double> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
  REQUIRE(cells.size() == 1 + 18);
  for (int j = 0; j < 6; ++j) CHECK(std::abs(cells[7 + j] - cells[13 + j]) < 1e-8);
}

TEST_CASE("switching error is localized to the band where the truncation is active") {
  const fs::path dir = temp_dir() / "rod_sw";
  fs::remove_all(dir);
  RodCommandConfig config;
  config.tau_samples = 2;  // the main sweep is irrelevant here
  cmd_rod(config, dir.string());

  std::ifstream in(dir / "switching_error.csv");
  std::string line;
  std::getline(in, line);  // header: tau, then eps{1e-2,1e-3} x k{0..3}
  double edge_err = -1.0, mid_err = -1.0;
  while (std::getline(in, line)) {
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    REQUIRE(cells.size() == 9);
    if (edge_err < 0.0) edge_err = cells[1];            // tau = 0.46, outside the band
    if (std::abs(cells[0] - 0.5) < 5e-5) mid_err = cells[1];  // inside, k = 0
  }
  CHECK(edge_err == 0.0);
  CHECK(mid_err > 1e-3);
}

TEST_CASE("check command passes clean and fails under an injected error") {
  CheckOptions clean;
  CHECK(cmd_check(clean) == 0);
  CheckOptions broken;
  broken.inject_error = 1e-6;
  CHECK(cmd_check(broken) != 0);
}

TEST_CASE("rod study of a straight rod has constant deformation columns") {
  const fs::path dir = temp_dir() / "rod_straight";
  fs::remove_all(dir);
  RodCommandConfig config;
  config.tau_samples = 11;
  config.straight = true;
  cmd_rod(config, dir.string());

  std::ifstream in(dir / "chi.csv");
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 11);
  for (const auto& r : rows) {
    for (int j = 0; j < 6; ++j) {
      CHECK(r[7 + j] == rows.front()[7 + j]);  // chi_robust columns constant
      CHECK(r[13 + j] == (j == 3 ? 1.0 : 0.0));  // chi_direct = (0, e1)
    }
  }
}
