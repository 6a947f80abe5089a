#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "commands.hpp"

using namespace smotzkin::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename Cmd>
Run run(Cmd cmd, const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = cmd(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("smotzkin_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("table csv and json") {
  RunConfig cfg;
  cfg.family = "a";
  cfg.n_max = 3;
  auto r = run(cmd_table, cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.rfind("n,k,count\n", 0) == 0);
  CHECK(r.out.find("\n3,0,1\n") != std::string::npos);

  cfg.family = "b";
  cfg.n_max = 4;
  cfg.format = Format::Json;
  r = run(cmd_table, cfg);
  auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& e : j)
    if (e["n"] == 4 && e["k"] == 0) found = e["count"] == "2";
  CHECK(found);

  cfg.family = "d";
  cfg.n_max = 3;
  cfg.format = Format::Csv;
  r = run(cmd_table, cfg);
  CHECK(r.out == "n,k,count\n2,0,1\n3,1,2\n");

  cfg.family = "e";
  CHECK(run(cmd_table, cfg).code == kUsageError);
}

TEST_CASE("csv and json carry the same rows, deterministically") {
  RunConfig cfg;
  cfg.family = "c";
  cfg.n_max = 45;
  auto csv = run(cmd_table, cfg);
  CHECK(csv.out == run(cmd_table, cfg).out);
  cfg.format = Format::Json;
  auto json = run(cmd_table, cfg);
  CHECK(json.out == run(cmd_table, cfg).out);

  std::multiset<std::tuple<int, int, std::string>> from_csv, from_json;
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    auto a = line.find(','), b = line.find(',', a + 1);
    from_csv.emplace(std::stoi(line.substr(0, a)), std::stoi(line.substr(a + 1, b - a - 1)), line.substr(b + 1));
  }
  for (const auto& e : nlohmann::json::parse(json.out))
    from_json.emplace(e["n"].get<int>(), e["k"].get<int>(), e["count"].get<std::string>());
  CHECK(from_csv == from_json);
  CHECK(from_csv.size() > 100);
}

TEST_CASE("series output") {
  RunConfig cfg;
  cfg.which = "t";
  cfg.order = 4;
  CHECK(run(cmd_series, cfg).out == "exponent,coefficient\n1,1\n2,2\n3,7\n4,30\n");
  cfg.which = "f";
  cfg.k = 0;
  cfg.order = 9;
  CHECK(run(cmd_series, cfg).out == "exponent,coefficient\n0,1\n3,1\n6,3\n9,12\n");
  cfg.which = "psi";
  cfg.order = 8;
  CHECK(run(cmd_series, cfg).out == "exponent,coefficient\n2,1\n5,3\n8,12\n");
  cfg.which = "t";
  cfg.order = 0;
  CHECK(run(cmd_series, cfg).out == "exponent,coefficient\n");
  cfg.which = "q";
  CHECK(run(cmd_series, cfg).code == kUsageError);
}

TEST_CASE("crosscheck passes by default and on the degenerate bound") {
  RunConfig cfg;
  cfg.n_max = 60;
  auto r = run(cmd_crosscheck, cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  int groups = 0;
  for (std::size_t pos = 0; (pos = r.out.find("PASS ", pos)) != std::string::npos; ++pos) ++groups;
  CHECK(groups >= 6);

  cfg.n_max = 0;
  CHECK(run(cmd_crosscheck, cfg).code == kOk);
}

TEST_CASE("crosscheck detects an injected fault") {
  RunConfig cfg;
  cfg.n_max = 20;
  cfg.fault = smotzkin::FaultInjection{7, 1};
  auto r = run(cmd_crosscheck, cfg);
  CHECK(r.code == kVerificationFailure);
  CHECK(r.err.find("a_{7,1}") != std::string::npos);

  cfg.fault = smotzkin::FaultInjection{30, 1};
  CHECK(run(cmd_crosscheck, cfg).code == kUsageError);
  cfg.fault.reset();
  cfg.oracle_bound = 40;
  CHECK(run(cmd_crosscheck, cfg).code == kUsageError);
}

TEST_CASE("oeis-diff against a cached b-file") {
  RunConfig cfg;
  cfg.cache_dir = SMOTZKIN_TEST_DATA;
  cfg.n_max = 20;
  auto r = run(cmd_oeis_diff, cfg);
  CHECK(r.code == kOk);
  CHECK(r.out.find("agree") != std::string::npos);

  cfg.n_max = 40;
  r = run(cmd_oeis_diff, cfg);
  CHECK(r.code == kVerificationFailure);
  CHECK(r.out.find("index 31") != std::string::npos);
}

TEST_CASE("oeis-diff cache miss, parse errors and mismatches") {
  auto dir = scratch_dir("oeis");
  RunConfig cfg;
  cfg.cache_dir = dir.string();
  cfg.n_max = 5;
  auto r = run(cmd_oeis_diff, cfg);
  CHECK(r.code == kCacheMiss);
  CHECK(r.err.find("cache-miss") != std::string::npos);

  std::ofstream(dir / "b001764.txt") << "0 1\n1 1\n2 3\n3\n";
  r = run(cmd_oeis_diff, cfg);
  CHECK(r.code == kParseError);
  CHECK(r.err.find("line 4") != std::string::npos);

  std::ofstream(dir / "b001764.txt") << "0 1\n1 1\n2 3\n3 12\n4 55\n5 274\n";
  r = run(cmd_oeis_diff, cfg);
  CHECK(r.code == kVerificationFailure);
  CHECK(r.out.find("index 5") != std::string::npos);

  cfg.seq_id = "X12";
  CHECK(run(cmd_oeis_diff, cfg).code == kUsageError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bfile names") {
  CHECK(bfile_name("A001764") == "b001764.txt");
  CHECK(bfile_name("A1764").empty());
  CHECK(bfile_name("B001764").empty());
}
