#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string out_file = std::string(std::tmpnam(nullptr)) + "_cli_out";
  std::string cmd = std::string(HCFIELD_BIN) + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = (status >= 256) ? status / 256 : status;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_file.c_str());
  return {code, ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const char* suffix) {
  return std::string(std::tmpnam(nullptr)) + suffix;
}

}  // namespace

TEST_CASE("moments subcommand emits the reference row") {
  RunResult r = run_cli("moments --lambda 0.1 --hardcore 4 --r0 100 --eta 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("mean") != std::string::npos);
  CHECK(r.output.find("1.000") != std::string::npos);   // mean 1.0e-5
  CHECK(r.output.find("5.44") != std::string::npos);    // variance 5.44e-12
  CHECK(r.output.find("0.5303") != std::string::npos);  // skewness
}

TEST_CASE("invalid traffic parameters exit 1 and name the offender") {
  RunResult r = run_cli("outage --lambda 0.1 --hardcore 10");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("lambda*c") != std::string::npos);
}

TEST_CASE("invalid link parameters exit 1") {
  RunResult r = run_cli("moments --lambda 0.1 --eta 0.5");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("eta") != std::string::npos);
}

TEST_CASE("numerical failure in the series engine exits 2") {
  RunResult r = run_cli(
      "delay --lambda 0.05 --hardcore 8 --r0 100 --eta 4 --pr 8e-6 "
      "--theta-min 10 --theta-max 10 --steps 1 --series --t0 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("CSV artifacts are self-describing and seed-deterministic") {
  std::string f1 = tmp_path("_a.csv"), f2 = tmp_path("_b.csv");
  std::string args =
      "simulate --lambda 0.1 --hardcore 4 --r0 100 --eta 3 --trials 500 --seed 42 -o ";
  REQUIRE(run_cli(args + f1).exit_code == 0);
  REQUIRE(run_cli(args + f2).exit_code == 0);
  std::string a = slurp(f1), b = slurp(f2);
  CHECK(a == b);
  CHECK(a.find("# lambda=0.1") != std::string::npos);
  CHECK(a.find("# seed=42") != std::string::npos);
  CHECK(a.find("# version=") != std::string::npos);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("worker count never changes the bytes written") {
  std::string f1 = tmp_path("_t1.csv"), f4 = tmp_path("_t4.csv");
  std::string base =
      "simulate --lambda 0.1 --hardcore 4 --r0 100 --eta 3 --trials 2000 --seed 7 ";
  REQUIRE(run_cli(base + "--threads 1 -o " + f1).exit_code == 0);
  REQUIRE(run_cli(base + "--threads 4 -o " + f4).exit_code == 0);
  CHECK(slurp(f1) == slurp(f4));
  std::remove(f1.c_str());
  std::remove(f4.c_str());
}

TEST_CASE("config file supplies defaults and flags win on conflict") {
  std::string cfg = tmp_path("_cfg.json");
  {
    std::ofstream out(cfg);
    out << R"({"lambda": 0.025, "hardcore": 16, "r0": 100, "eta": 3})";
  }
  RunResult from_cfg = run_cli("moments --config " + cfg);
  CHECK(from_cfg.exit_code == 0);
  CHECK(from_cfg.output.find("2.5") != std::string::npos);  // mean 2.5e-6

  RunResult overridden = run_cli("moments --config " + cfg + " --lambda 0.1 --hardcore 4");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output.find("5.44") != std::string::npos);  // back to 5.44e-12
  std::remove(cfg.c_str());
}

TEST_CASE("distance subcommand writes a monotone CDF") {
  RunResult r = run_cli("distance --lambda 0.1 --hardcore 4 --r0 100 --eta 3 --xsteps 40");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string line;
  double prev = -1.0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      CHECK(line.find("cdf") != std::string::npos);
      seen_header = true;
      continue;
    }
    // columns: x, cdf, pdf
    size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
    double cdf = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(cdf >= prev);
    prev = cdf;
  }
  CHECK(seen_header);
}

TEST_CASE("outage columns stay within probability bounds") {
  RunResult r = run_cli(
      "outage --lambda 0.05 --hardcore 10 --r0 50 --eta 4 --pr 8e-7 --steps 11");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.output);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');  // theta_db may be negative; skip
    std::getline(row, cell, ',');  // theta_lin
    while (std::getline(row, cell, ',')) {
      double v = std::stod(cell);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("reproduce writes a CSV table and a pass/fail summary") {
  std::string csv = tmp_path("_rep.csv"), json = tmp_path("_rep.json");
  RunResult r = run_cli("reproduce fig2 --trials 20000 --seed 3 -o " + csv +
                        " --json " + json);
  CHECK(r.output.find("PASS") != std::string::npos);
  std::string summary = slurp(json);
  CHECK(summary.find("\"checks\"") != std::string::npos);
  CHECK(summary.find("\"preset\"") != std::string::npos);
  CHECK(slurp(csv).find("#") != std::string::npos);
  std::remove(csv.c_str());
  std::remove(json.c_str());
}

TEST_CASE("unknown preset exits with a validation error") {
  RunResult r = run_cli("reproduce fig9");
  CHECK(r.exit_code == 1);
}

TEST_CASE("version flag reports the library version") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.1.0") != std::string::npos);
}
