#include "commands.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef SMOTZKIN_WITH_FETCH
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif
#include <json.hpp>

#include "smotzkin/bfile.hpp"
#include "smotzkin/oracle.hpp"
#include "smotzkin/recurrence.hpp"
#include "smotzkin/series.hpp"

namespace smotzkin::cli {

using nlohmann::json;

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.family.size() != 1 || std::string("abcd").find(cfg.family[0]) == std::string::npos) {
    err << "unknown family '" << cfg.family << "' (expected a, b, c or d)\n";
    return kUsageError;
  }
  if (cfg.n_max < 0) {
    err << "--n-max must be non-negative\n";
    return kUsageError;
  }
  char f = cfg.family[0];
  TablePair pair = (f == 'a' || f == 'b') ? ab_tables(cfg.n_max) : cd_tables(cfg.n_max);
  const CountTable& table = (f == 'a' || f == 'c') ? pair.first : pair.second;

  json rows = json::array();
  if (cfg.format == Format::Csv) out << "n,k,count\n";
  for (int n = 0; n <= cfg.n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      const BigInt& v = table.at(n, k);
      if (v == 0) continue;
      if (cfg.format == Format::Csv) out << n << ',' << k << ',' << v.get_str() << '\n';
      else rows.push_back({{"n", n}, {"k", k}, {"count", v.get_str()}});
    }
  if (cfg.format == Format::Json) out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_max < 0 || cfg.oracle_bound < 0 || cfg.oracle_bound > kOracleHardBound) {
    err << "--n-max must be >= 0 and --oracle-bound in [0, " << kOracleHardBound << "]\n";
    return kUsageError;
  }
  if (cfg.fault && (cfg.fault->n < 0 || cfg.fault->n > cfg.n_max || cfg.fault->k < 0 ||
                    cfg.fault->k > cfg.fault->n)) {
    err << "injected fault must satisfy 0 <= k <= n <= n_max\n";
    return kUsageError;
  }
  CrosscheckOptions options;
  options.n_max = cfg.n_max;
  options.oracle_bound = cfg.oracle_bound;
  options.fault = cfg.fault;

  auto results = run_crosscheck(options);
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.compared << " compared): " << r.detail << '\n';
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    err << "first failing check: " << first_failure->name << ": " << first_failure->detail << '\n';
    return kVerificationFailure;
  }
  out << "all " << results.size() << " check groups passed\n";
  return kOk;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.order < 0 || cfg.k < 0) {
    err << "--order and --k must be non-negative\n";
    return kUsageError;
  }
  std::optional<TruncSeries> series;
  if (cfg.which == "t") series = cfg.order == 0 ? TruncSeries(Var::X, 0) : ternary_tree_series(cfg.order);
  else if (cfg.which == "f") series = f_series(cfg.k, cfg.order);
  else if (cfg.which == "g") series = g_series(cfg.k, cfg.order);
  else if (cfg.which == "phi") series = phi_series(cfg.k, cfg.order);
  else if (cfg.which == "psi") series = psi_series(cfg.k, cfg.order);
  else {
    err << "unknown series '" << cfg.which << "' (expected f, g, phi, psi or t)\n";
    return kUsageError;
  }

  json rows = json::array();
  if (cfg.format == Format::Csv) out << "exponent,coefficient\n";
  for (int e = 0; e <= series->order(); ++e) {
    const Rational& c = (*series)[e];
    if (c == 0) continue;
    if (cfg.format == Format::Csv) out << e << ',' << coefficient_string(c) << '\n';
    else rows.push_back({{"exponent", e}, {"coefficient", coefficient_string(c)}});
  }
  if (cfg.format == Format::Json) out << rows.dump(2) << '\n';
  return kOk;
}

std::string bfile_name(const std::string& seq_id) {
  if (seq_id.size() != 7 || (seq_id[0] != 'A' && seq_id[0] != 'a')) return {};
  for (std::size_t i = 1; i < seq_id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(seq_id[i]))) return {};
  return "b" + seq_id.substr(1) + ".txt";
}

namespace {

#ifdef SMOTZKIN_WITH_FETCH
bool fetch_bfile(const std::string& seq_id, const std::filesystem::path& dest, std::ostream& err) {
  httplib::Client client("https://oeis.org");
  client.set_follow_location(true);
  std::string id = "A" + seq_id.substr(1);
  auto res = client.Get("/" + id + "/" + bfile_name(seq_id));
  if (!res || res->status != 200) {
    err << "fetch of " << id << " failed\n";
    return false;
  }
  std::filesystem::create_directories(dest.parent_path());
  std::ofstream(dest, std::ios::binary) << res->body;
  return true;
}
#else
bool fetch_bfile(const std::string&, const std::filesystem::path&, std::ostream& err) {
  err << "this build has no network fetch support\n";
  return false;
}
#endif

}  // namespace

int cmd_oeis_diff(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string name = bfile_name(cfg.seq_id);
  if (name.empty()) {
    err << "sequence id must look like A001764, got '" << cfg.seq_id << "'\n";
    return kUsageError;
  }
  if (cfg.n_max < 0) {
    err << "--n-max must be non-negative\n";
    return kUsageError;
  }
  std::filesystem::path path = std::filesystem::path(cfg.cache_dir) / name;
  if (!std::filesystem::exists(path)) {
    if (!cfg.allow_fetch) {
      err << "cache-miss: " << path.string() << " not found and fetching is disabled\n";
      return kCacheMiss;
    }
    if (!fetch_bfile(cfg.seq_id, path, err)) return kCacheMiss;
  }

  std::ifstream in(path);
  BFile bfile;
  try {
    bfile = parse_bfile(in);
  } catch (const BFileParseError& e) {
    err << path.string() << ": " << e.what() << '\n';
    return kParseError;
  }

  for (int m = 0; m <= cfg.n_max; ++m) {
    auto it = bfile.values.find(m);
    if (it == bfile.values.end()) {
      out << "missing: b-file has no entry for index " << m << '\n';
      return kVerificationFailure;
    }
    BigInt computed = smotzkin_count(m);
    if (it->second != computed) {
      out << "mismatch at index " << m << ": b-file " << it->second.get_str() << ", computed "
          << computed.get_str() << '\n';
      return kVerificationFailure;
    }
  }
  out << "agree: indices 0.." << cfg.n_max << " (" << cfg.n_max + 1 << " values) match " << name << '\n';
  return kOk;
}

}  // namespace smotzkin::cli
