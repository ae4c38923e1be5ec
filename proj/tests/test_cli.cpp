#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "spincorr/analysis.hpp"
#include "spincorr/cli.hpp"

using namespace spincorr;

namespace {

struct Result {
  int code = -1;
  std::string out, err;
};

Result run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"spincorr"};
  store.insert(store.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : store) argv.push_back(s.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  return v;
}

// Table rows (header excluded), metadata lines dropped.
std::vector<std::vector<std::string>> table(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  bool header = true;
  for (const auto& l : lines(text)) {
    if (l.empty() || l[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    rows.push_back(split(l));
  }
  return rows;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::string num17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

TEST_CASE("curve: Fig. 1b is type II for all measures") {
  const Result r = run_cli({"curve", "--jx", "-1", "--jy", "-1.5", "--dz", "1.8", "--gz", "0.3", "--jz", "-2", "--tmin",
                            "0.01", "--tmax", "10", "--steps", "500"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).front() == "T,Q,U,F,Q_branch,U_branch,F_branch");
  CHECK(table(r.out).size() == 500);
  CHECK(contains(r.out, "# behavior Q=II"));
  CHECK(contains(r.out, "# behavior U=II"));
  CHECK(contains(r.out, "# behavior F=II"));
  CHECK(contains(r.out, "# consensus=II"));
  CHECK(contains(r.out, "# parameterization=raw"));
}

TEST_CASE("curve: Fig. 6a is type I, the classical line is all zero") {
  const Result a = run_cli({"curve", "--effective", "--jz", "1", "--r1", "0.5", "--r2", "0.5"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "# consensus=I\n"));

  const Result z = run_cli({"curve", "--effective", "--jz", "0", "--r1", "1", "--r2", "1"});
  CHECK(z.code == 0);
  for (const auto& row : table(z.out))
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(std::stod(row[k])) < 1e-12);
}

TEST_CASE("curve: raw and effective invocations give identical numbers") {
  const Couplings c{-1, -1.5, 2, 1.8, 0.3};
  const EffectiveParams p = effective_params(c);
  const Result raw = run_cli({"curve", "--jx", "-1", "--jy", "-1.5", "--jz", "2", "--dz", "1.8", "--gz", "0.3"});
  const Result eff =
      run_cli({"curve", "--effective", "--jz", num17(p.jz), "--r1", num17(p.r1), "--r2", num17(p.r2)});
  REQUIRE(raw.code == 0);
  REQUIRE(eff.code == 0);
  CHECK(table(raw.out) == table(eff.out));
  CHECK(table(raw.out).size() == 500);
}

TEST_CASE("curve: CSV values parse back exactly") {
  const Result r = run_cli({"curve", "--effective", "--jz", "-0.7", "--r1", "1.3", "--r2", "0.2", "--steps", "200",
                            "--tmin", "0.05", "--tmax", "20"});
  REQUIRE(r.code == 0);
  SweepSpec s;
  s.fixed = EffectiveParams{-0.7, 1.3, 0.2};
  s.min = 0.05, s.max = 20, s.steps = 200, s.spacing = Spacing::Log;
  const std::vector<SweepRow> rows = sweep(s);
  const auto t = table(r.out);
  REQUIRE(t.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(std::strtod(t[i][0].c_str(), nullptr) == rows[i].t);
    CHECK(std::strtod(t[i][1].c_str(), nullptr) == rows[i].q.value);
    CHECK(std::strtod(t[i][2].c_str(), nullptr) == rows[i].u.value);
    CHECK(std::strtod(t[i][3].c_str(), nullptr) == rows[i].f.value);
  }
}

TEST_CASE("curve: JSON output") {
  const Result r = run_cli({"curve", "--effective", "--jz", "1", "--r1", "3", "--r2", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "curve");
  CHECK(j["parameters"]["parameterization"] == "effective");
  CHECK(j["rows"].size() == 500);
  CHECK(j["rows"][0]["T"].get<double>() == 0.01);
  CHECK(j.dump().find("\"I\"") != std::string::npos);
}

TEST_CASE("phase: boundary cells lie on r1 + r2 = 2|jz|") {
  const Result r = run_cli({"phase", "--jz", "1", "--r1-min", "0", "--r1-max", "5", "--r2-min", "0", "--r2-max", "5"});
  REQUIRE(r.code == 0);
  const auto t = table(r.out);
  CHECK(t.size() == 101 * 101);
  int boundary = 0;
  for (const auto& row : t) {
    const double r1 = std::stod(row[0]), r2 = std::stod(row[1]);
    const double b = r1 + r2 - 2;
    if (row[2] == "boundary") {
      ++boundary;
      CHECK(std::abs(b) < 1e-8);
    } else {
      CHECK(row[2] == (b < 0 ? "Omega0" : "Omega1"));
    }
  }
  CHECK(boundary == 41);

  const Result z = run_cli({"phase", "--jz", "0", "--r1-steps", "11", "--r2-steps", "11"});
  REQUIRE(z.code == 0);
  for (const auto& row : table(z.out))
    if (std::stod(row[0]) > 0 || std::stod(row[1]) > 0) CHECK(row[2] == "Omega1");
}

TEST_CASE("phase: zero-temperature limit mode") {
  const Result r = run_cli({"phase", "--jz", "1", "--t0", "--r1-min", "0", "--r1-max", "5", "--r2-min", "0",
                            "--r2-max", "5", "--r1-steps", "21", "--r2-steps", "21"});
  REQUIRE(r.code == 0);
  for (const auto& row : table(r.out)) {
    const double r1 = std::stod(row[0]), r2 = std::stod(row[1]);
    double expected = 1;
    if ((r2 == 0 && r1 < 2) || (r1 > 2 && r2 == r1 - 2)) expected = 0;
    if (r1 == 2 && r2 == 0) expected = 1.0 / 3;
    for (int k = 3; k <= 5; ++k) CHECK(std::stod(row[k]) == doctest::Approx(expected).epsilon(1e-15));
  }
}

TEST_CASE("phase: oversized grid is a usage error") {
  const Result r = run_cli({"phase", "--jz", "1", "--r1-steps", "10000", "--r2-steps", "10000"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("sudden") {
  const Result a = run_cli({"sudden", "--effective", "--jz", "1", "--r2", "0.4", "--axis", "r1", "--min", "0", "--max",
                            "4", "--t", "1.5"});
  REQUIRE(a.code == 0);
  const auto ev = table(a.out);
  REQUIRE(ev.size() == 3);
  for (const auto& e : ev) {
    CHECK(std::stod(e[1]) == doctest::Approx(1.6).epsilon(0.005));
    CHECK(e[5] == "true");
  }

  const Result b = run_cli({"sudden", "--effective", "--r1", "0.4", "--r2", "2.6", "--axis", "jz", "--min", "-3", "--max",
                            "3", "--t", "1"});
  REQUIRE(b.code == 0);
  CHECK(table(b.out).size() == 6);

  const Result none = run_cli({"sudden", "--effective", "--jz", "0", "--r2", "0", "--axis", "r1", "--min", "0", "--max",
                               "4", "--t", "1"});
  CHECK(none.code == 0);
  CHECK(table(none.out).empty());

  CHECK(run_cli({"sudden", "--effective", "--jz", "1", "--axis", "T"}).code == 2);
}

TEST_CASE("verify") {
  const Result a = run_cli({"verify", "--samples", "10", "--seed", "7"});
  const Result b = run_cli({"verify", "--samples", "10", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "# result=PASS"));

  const Result bad = run_cli({"verify", "--samples", "10", "--tol-q", "1e-15", "--tol-u", "1e-15", "--tol-f", "1e-15"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "# VIOLATION"));
  CHECK(contains(bad.out, "# result=FAIL"));
}

TEST_CASE("asymptote") {
  CHECK(run_cli({"asymptote", "--effective", "--jz", "1", "--r1", "1", "--r2", "2"}).code == 0);
  const Result z = run_cli({"asymptote", "--effective", "--jz", "0", "--r1", "2", "--r2", "0"});
  CHECK(z.code == 0);
  for (const auto& row : table(z.out)) CHECK(row[4] == "0");
  CHECK(run_cli({"asymptote", "--effective", "--jz", "1", "--r1", "1", "--r2", "2", "--temps", "1,2,3"}).code == 2);
}

TEST_CASE("zerot") {
  const Result r = run_cli({"zerot", "--effective", "--jz", "1", "--r1", "2", "--r2", "0"});
  REQUIRE(r.code == 0);
  const auto t = table(r.out);
  REQUIRE(t.size() == 1);
  CHECK(std::stod(t[0][0]) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(t[0][1] == "3");
  CHECK(run_cli({"zerot", "--effective", "--jz", "1", "--r1", "2.0001", "--r2", "0"}).code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"curve", "--effective", "--jz", "1", "--r1", "1", "--jx", "1"}).code == 2);
  CHECK(run_cli({"curve", "--jx", "1", "--r1", "1"}).code == 2);
  CHECK(run_cli({"curve", "--effective", "--jz", "1", "--tmin", "0"}).code == 2);
  CHECK(run_cli({"curve", "--effective", "--jz", "1", "--tmin", "-1", "--spacing", "linear"}).code == 2);
  CHECK(run_cli({"curve", "--effective", "--jz", "1", "--format", "xml"}).code == 2);
  CHECK(run_cli({"curve", "--effective", "--jz", "1", "--r1", "-1"}).code == 2);
  CHECK(run_cli({"curve", "--effective", "--jz", "1", "--steps", "1"}).code == 2);
}

TEST_CASE("--out writes atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("spincorr_cli_test_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path file = dir / "curve.csv";
  const Result r = run_cli({"curve", "--effective", "--jz", "1", "--r1", "3", "--r2", "0", "--out", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(file);
  std::stringstream buf;
  buf << in.rdbuf();
  const Result direct = run_cli({"curve", "--effective", "--jz", "1", "--r1", "3", "--r2", "0"});
  CHECK(buf.str() == direct.out);
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);

  CHECK(run_cli({"curve", "--effective", "--jz", "1", "--out", (dir / "missing" / "x.csv").string()}).code == 1);
  fs::remove_all(dir);
}
