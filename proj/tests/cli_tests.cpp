// Integration tests for the cpdetect binary: spawn it on fixtures and parse
// what it writes. The binary path comes from the build system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cpdetect/boundary.hpp"
#include "cpdetect/generators.hpp"
#include "cpdetect/io.hpp"

using json = nlohmann::json;
using namespace cpdetect;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/cpdetect_test_") + name;
}

RunResult run_cli(const std::string& args) {
  const std::string out_file = tmp_path("stdout.txt");
  const std::string cmd =
      std::string(CPDETECT_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("detect runs on a minimal 1x2 matrix") {
  const std::string path = tmp_path("tiny.csv");
  std::ofstream(path) << "0,0\n";
  const RunResult r = run_cli("detect --input " + path + " --side two --gamma 2");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["schema_version"] == 1);
  CHECK(report["p"] == 1);
  CHECK(report["n"] == 2);
  CHECK(report["grid_size"] == 1);
  CHECK(report.contains("combined_reject"));
  CHECK(report["pbj"]["degenerate_threshold"] == true);
}

TEST_CASE("detect: null fixture accepts, planted change rejects") {
  const std::int64_t p = 200, n = 2000;
  const std::string null_path = tmp_path("null.csv");
  const ObservationMatrix x0 = generate_null(p, n, {}, RngStream(20240811));
  write_matrix_csv_file(null_path, x0);

  const RunResult r0 = run_cli("detect --input " + null_path + " --gamma 2 --side two");
  REQUIRE(r0.exit_code == 0);
  const json rep0 = json::parse(r0.out);
  CHECK(rep0["combined_reject"] == false);

  // planted signal: s = 50 rows, t* = 700, 8x the boundary radius at the
  // fixture's effective calibration (verified to clear gamma = 2 reliably)
  AlternativeSpec spec;
  spec.p = p;
  spec.n = n;
  spec.t_star = 700;
  spec.side = Side::one_sided;
  const Calibration cal = calibration_from_dims(p, n, 50, Regime::three_log);
  spec.rho = 8.0 * std::sqrt(boundary_one_sided(cal.a, cal.beta, double(p)).rho_squared);
  for (std::int64_t j = 0; j < 50; ++j) spec.support.push_back(j);
  const ObservationMatrix x1 = generate_alternative(spec, RngStream(20240811));
  const std::string alt_path = tmp_path("planted.csv");
  write_matrix_csv_file(alt_path, x1);

  const RunResult r1 = run_cli("detect --input " + alt_path + " --gamma 2 --side one");
  REQUIRE(r1.exit_code == 0);
  const json rep1 = json::parse(r1.out);
  CHECK(rep1["combined_reject"] == true);
}

TEST_CASE("detect rejects malformed csv with exit 2") {
  const std::string path = tmp_path("ragged.csv");
  std::ofstream(path) << "1,2,3\n4,5\n";
  CHECK(run_cli("detect --input " + path).exit_code == 2);

  const std::string path2 = tmp_path("nonnum.csv");
  std::ofstream(path2) << "1,2\n3,oops\n";
  CHECK(run_cli("detect --input " + path2).exit_code == 2);
}

TEST_CASE("boundary subcommand surfaces the calculators") {
  const RunResult r = run_cli("boundary --a 0.1 --beta 0.6 --p 2.718281828459045");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["rho_squared"].get<double>() == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(rep["case_label"] == "Moderate");

  const RunResult r2 = run_cli("boundary --regime2 --a 0.5 --beta 1.0 --p 100");
  REQUIRE(r2.exit_code == 0);
  const json rep2 = json::parse(r2.out);
  CHECK(rep2["r"].get<double>() == doctest::Approx(1.5));
  CHECK(rep2["rho_squared"].get<double>() ==
        doctest::Approx(3.0 * std::log(100.0)).epsilon(1e-12));

  CHECK(run_cli("boundary --a 0.1 --beta 1.2 --p 100").exit_code == 2);

  const RunResult r3 = run_cli("boundary --rates --p 100 --n 1000 --s 10");
  REQUIRE(r3.exit_code == 0);
  CHECK(json::parse(r3.out)["collier_rate"].get<double>() == doctest::Approx(10.0));
  CHECK(json::parse(r3.out)["note"] == "rates up to constants");
}

TEST_CASE("simulate runs a config file and reproduces byte-for-byte modulo timestamp") {
  const std::string cfg_path = tmp_path("sim.json");
  std::ofstream(cfg_path) << R"({
    "schema_version": 1, "p": 20, "n": 64, "trials": 30, "seed": 7,
    "test": "combined", "side": "one", "gamma": 2.0, "delta": "auto",
    "alternative": {"kind": "fixed", "s": 6, "t_star": 20, "rho": 5.0}
  })";
  const std::string out1 = tmp_path("sim1.json");
  const std::string out2 = tmp_path("sim2.json");
  REQUIRE(run_cli("simulate --config " + cfg_path + " --out " + out1).exit_code == 0);
  REQUIRE(run_cli("simulate --config " + cfg_path + " --out " + out2).exit_code == 0);

  json a = json::parse(read_file(out1));
  json b = json::parse(read_file(out2));
  CHECK(a.contains("timestamp"));
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a == b);
  CHECK(a["type1_hat"].is_number());
}

TEST_CASE("simulate flags every offending config key") {
  const std::string cfg_path = tmp_path("bad.json");
  std::ofstream(cfg_path) << R"({"schema_version": 2, "p": 20})";
  const std::string err_file = tmp_path("stderr.txt");
  const std::string cmd = std::string(CPDETECT_BIN) + " simulate --config " + cfg_path +
                          " 2> " + err_file + " > /dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  const std::string err = read_file(err_file);
  CHECK(err.find("schema_version") != std::string::npos);
  CHECK(err.find("'n'") != std::string::npos);
  CHECK(err.find("'trials'") != std::string::npos);
  CHECK(err.find("'alternative'") != std::string::npos);
}

TEST_CASE("sweep: empty plan emits a header-only csv, seeds reproduce files") {
  const std::string cfg_path = tmp_path("sweep_empty.json");
  std::ofstream(cfg_path) << R"({
    "schema_version": 1, "p": 30, "n_values": [], "beta_values": [],
    "multipliers": [], "trials": 5, "seed": 1
  })";
  const std::string out = tmp_path("sweep_empty.csv");
  REQUIRE(run_cli("sweep --config " + cfg_path + " --out " + out).exit_code == 0);
  const std::string csv = read_file(out);
  CHECK(csv ==
        "a,beta,multiplier,p,n,s,rho,type1,type1_lo,type1_hi,"
        "type2,type2_lo,type2_hi,risk,saturated_flag\n");

  const std::string cfg2 = tmp_path("sweep_small.json");
  std::ofstream(cfg2) << R"({
    "schema_version": 1, "p": 30, "n_values": [64], "beta_values": [0.5],
    "multipliers": [0.0, 4.0], "trials": 10, "seed": 11,
    "test": "combined", "side": "one", "gamma": 2.0
  })";
  const std::string o1 = tmp_path("sweep1.csv");
  const std::string o2 = tmp_path("sweep2.csv");
  REQUIRE(run_cli("sweep --config " + cfg2 + " --out " + o1).exit_code == 0);
  REQUIRE(run_cli("sweep --config " + cfg2 + " --out " + o2).exit_code == 0);
  CHECK(read_file(o1) == read_file(o2));
  CHECK(read_file(o1).find("\n") != std::string::npos);
}

TEST_CASE("presets parse and run") {
  const RunResult r =
      run_cli("simulate --preset typeI-audit --trials 10 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("trials,", 0) == 0);
}
