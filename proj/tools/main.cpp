#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

using smotzkin::cli::Format;
using smotzkin::cli::RunConfig;

namespace {

void add_format(CLI::App* cmd, RunConfig& cfg) {
  static const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial S-Motzkin path counts, series and identity checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* table = app.add_subcommand("table", "Emit the nonzero counts of one family");
  table->add_option("--family", cfg.family, "a, b, c or d");
  table->add_option("--n-max", cfg.n_max, "Largest path length")->capture_default_str();
  add_format(table, cfg);

  auto* cross = app.add_subcommand("crosscheck", "Run every cross-route verification");
  int cross_n_max = 60;
  cross->add_option("--n-max", cross_n_max, "Largest path length compared")->capture_default_str();
  cross->add_option("--oracle-bound", cfg.oracle_bound, "Largest length for brute force")
      ->capture_default_str();
  std::vector<int> fault;
  cross->add_option("--inject-fault", fault, "Debug: bump a_{n,k} in the DP table")
      ->expected(2)
      ->delimiter(',');

  auto* series = app.add_subcommand("series", "Emit generating-function coefficients");
  series->add_option("which", cfg.which, "f, g, phi, psi or t")->required();
  series->add_option("--k", cfg.k, "Height index");
  series->add_option("--order", cfg.order, "Truncation order");
  add_format(series, cfg);

  auto* oeis = app.add_subcommand("oeis-diff", "Compare C(3m,m)/(2m+1) against a cached b-file");
  oeis->add_option("--seq-id", cfg.seq_id, "OEIS id")->capture_default_str();
  int oeis_n_max = 20;
  oeis->add_option("--n-max", oeis_n_max, "Largest index compared")->capture_default_str();
  oeis->add_option("--cache-dir", cfg.cache_dir, "Directory holding bNNNNNN.txt files");
  oeis->add_flag("--allow-fetch", cfg.allow_fetch, "Download the b-file when it is not cached");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : smotzkin::cli::kUsageError;
  }
  if (*cross) cfg.n_max = cross_n_max;
  if (*oeis) cfg.n_max = oeis_n_max;
  if (fault.size() == 2) cfg.fault = smotzkin::FaultInjection{fault[0], fault[1]};

  try {
    if (*table) return smotzkin::cli::cmd_table(cfg, std::cout, std::cerr);
    if (*cross) return smotzkin::cli::cmd_crosscheck(cfg, std::cout, std::cerr);
    if (*series) return smotzkin::cli::cmd_series(cfg, std::cout, std::cerr);
    if (*oeis) return smotzkin::cli::cmd_oeis_diff(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return smotzkin::cli::kUsageError;
  }
  return smotzkin::cli::kUsageError;
}
