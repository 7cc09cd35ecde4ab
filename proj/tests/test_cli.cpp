#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "volterra/cli.hpp"

using namespace volterra;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "volterra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval at t = 1 uses the identity route") {
  const Outcome r = run_cli({"eval", "--t", "1", "--alpha", "0", "--beta", "0"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"t", "method", "value", "error_estimate"});
  CHECK(rows[1][1] == "identity");
  CHECK(std::stod(rows[1][2]) == doctest::Approx(2.26653450769984883507).epsilon(1e-10));
}

TEST_CASE("direct and laplace routes agree") {
  const Outcome a = run_cli({"eval", "--t", "0.5", "--alpha", "0.8", "--beta", "1", "--method", "direct"});
  const Outcome b = run_cli({"eval", "--t", "0.5", "--alpha", "0.8", "--beta", "1", "--method", "laplace"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const double va = std::stod(csv_rows(a.out)[1][2]);
  const double vb = std::stod(csv_rows(b.out)[1][2]);
  CHECK(va == doctest::Approx(vb).epsilon(1e-8));
  CHECK(csv_rows(a.out)[1][1] == "direct");
  CHECK(csv_rows(b.out)[1][1] == "laplace");
}

TEST_CASE("auto route for non-integer beta is laplace") {
  const Outcome r = run_cli({"eval", "--t", "0.5:0.5:1.5", "--beta", "0.5"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] == "laplace");
  CHECK(rows[3][0] == "1.5");
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"eval", "--t", "1", "--alpha", "-2", "--beta", "0"}).code == 2);
  CHECK(run_cli({"eval", "--alpha", "0"}).code == 2);
  CHECK(run_cli({"eval", "--t", "1", "--method", "bogus"}).code == 2);
  CHECK(run_cli({"eval", "--t", "abc"}).code == 2);
  CHECK(run_cli({"nonexistent"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  // Identity route needs integer beta.
  CHECK(run_cli({"eval", "--t", "1", "--beta", "0.5", "--method", "identity"}).code == 2);
  // Inversion cannot reach 1e-20.
  const Outcome r = run_cli({"eval", "--t", "1", "--beta", "0.5", "--method", "laplace", "--tol", "1e-20"});
  CHECK(r.code == 3);
  CHECK(r.err.find("laplace") != std::string::npos);
}

TEST_CASE("json and csv carry the same digits") {
  const std::vector<std::string> base = {"eval", "--t", "0.25:0.25:1", "--alpha", "0.3", "--beta", "1.5"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const Outcome c = run_cli(csv_args), j = run_cli(json_args);
  REQUIRE(c.code == 0);
  REQUIRE(j.code == 0);
  const auto rows = csv_rows(c.out);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.size() == rows.size() - 1);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    CHECK(doc[i]["method"] == rows[i + 1][1]);
    CHECK(doc[i]["value"].get<double>() == std::stod(rows[i + 1][2]));
    CHECK(doc[i]["t"].get<double>() == std::stod(rows[i + 1][0]));
  }
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::string> args = {"eval", "--t", "0.1:0.3:2", "--beta", "2.5", "--alpha", "-0.4"};
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("tolerance from the environment, flags win") {
  ::setenv("VOLTERRA_TOL", "1e-6", 1);
  CHECK(cli::default_tolerance() == 1e-6);
  ::setenv("VOLTERRA_TOL", "1e-20", 1);
  CHECK(run_cli({"eval", "--t", "1", "--beta", "0.5", "--method", "laplace"}).code == 3);
  CHECK(run_cli({"eval", "--t", "1", "--beta", "0.5", "--method", "laplace", "--tol", "1e-10"}).code == 0);
  ::setenv("VOLTERRA_TOL", "garbage", 1);
  CHECK(cli::default_tolerance() == 1e-10);
  ::unsetenv("VOLTERRA_TOL");
  CHECK(cli::default_tolerance() == 1e-10);
}

TEST_CASE("residue-poly") {
  const Outcome r = run_cli({"residue-poly", "--k", "2", "--alpha", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1, 0, 0.25\n");
  CHECK(run_cli({"residue-poly", "--k", "1", "--alpha", "0.5", "--ascending"}).out == "-0.5, 1\n");
  CHECK(run_cli({"residue-poly", "--k", "-1"}).code == 2);
}

TEST_CASE("coeffs D at alpha 0") {
  const Outcome r = run_cli({"coeffs", "--kind", "D", "--alpha", "0", "--n", "3"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"n", "value"});
  const std::vector<double> want = oracle::recip_gamma_taylor(3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(std::stod(rows[n + 1][1]) == doctest::Approx(want[n]).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("figure 1 has the shape of N") {
  const Outcome r = run_cli({"figures", "--fig", "1"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() > 10);
  CHECK(rows[0] == std::vector<std::string>{"t", "N"});
  double prev = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i][1]);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(run_cli({"figures", "--fig", "11"}).code == 2);
  CHECK(run_cli({"figures", "--fig", "1", "--fig", "2"}).code == 2);
}

TEST_CASE("figures written to a directory") {
  const auto dir = std::filesystem::temp_directory_path() / "volterra_cli_test_figs";
  std::filesystem::remove_all(dir);
  const Outcome r = run_cli({"figures", "--fig", "2", "--fig", "3", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(std::filesystem::exists(dir / "fig2.csv"));
  CHECK(std::filesystem::exists(dir / "fig3.csv"));
  std::ifstream in(dir / "fig2.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,N");
  std::filesystem::remove_all(dir);
}

TEST_CASE("ramanujan command") {
  const Outcome r = run_cli({"ramanujan", "--t", "1"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][1]) == doctest::Approx(0.45174732075919640029).epsilon(1e-10));
  const Outcome w = run_cli({"ramanujan", "--t", "1", "--form", "wood", "--order", "0"});
  CHECK(std::stod(csv_rows(w.out)[1][1]) == doctest::Approx(0.45174732075919640029).epsilon(1e-10));
}

TEST_CASE("solve command") {
  const Outcome r = run_cli({"solve", "--f", "linear"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 66);
  CHECK(rows[0] == std::vector<std::string>{"t", "u"});
  CHECK(std::stod(rows[65][1]) == doctest::Approx(-1.24941661444383496147).epsilon(1e-6));
  CHECK(run_cli({"solve", "--f", "linear", "--step", "0.125"}).code == 3);
  CHECK(run_cli({"solve", "--f", "linear", "--step", "0.125", "--no-check"}).code == 0);

  const auto path = std::filesystem::temp_directory_path() / "volterra_cli_test_input.csv";
  {
    std::ofstream f(path);
    f << "t,f\n";
    for (int i = 0; i <= 64; ++i) f << cli::format_number(i / 64.0) << "," << cli::format_number(i * i / 4096.0) << "\n";
  }
  const Outcome a = run_cli({"solve", "--input", path.string()});
  const Outcome b = run_cli({"solve", "--f", "quadratic", "--step", "0.015625"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  const auto ra = csv_rows(a.out), rb = csv_rows(b.out);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 1; i < ra.size(); i += 8) {
    CHECK(std::stod(ra[i][1]) == doctest::Approx(std::stod(rb[i][1])).epsilon(1e-6).scale(1e-3));
  }
  std::filesystem::remove(path);
  CHECK(run_cli({"solve", "--input", "/nonexistent/file.csv"}).code == 2);
}

}
