#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "smotzkin/crosscheck.hpp"

namespace smotzkin::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kCacheMiss = 3,
  kParseError = 4,
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string family = "a";
  std::string which = "f";
  int n_max = 10;
  int k = 0;
  int order = 10;
  Format format = Format::Csv;
  int oracle_bound = 12;
  std::string cache_dir = ".";
  bool allow_fetch = false;
  std::string seq_id = "A001764";
  std::optional<FaultInjection> fault;
};

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oeis_diff(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// "A001764" -> "b001764.txt"; empty when the id is not of that shape.
std::string bfile_name(const std::string& seq_id);

}  // namespace smotzkin::cli
