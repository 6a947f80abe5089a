#include "smotzkin/crosscheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "smotzkin/closed_form.hpp"
#include "smotzkin/determinant.hpp"
#include "smotzkin/oracle.hpp"
#include "smotzkin/recurrence.hpp"
#include "smotzkin/series.hpp"

namespace smotzkin {

namespace {

class Group {
 public:
  explicit Group(std::string name) { result_.name = std::move(name); }

  // Records one comparison; only the first failure message is kept.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.compared;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  CheckResult finish(std::string summary) {
    if (result_.passed) result_.detail = std::move(summary);
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

std::string entry_name(Family f, int n, int k) {
  std::ostringstream out;
  out << family_letter(f) << "_{" << n << "," << k << "}";
  return out.str();
}

struct Tables {
  TablePair ab;
  TablePair cd;

  const CountTable& of(Family f) const {
    switch (f) {
      case Family::A: return ab.first;
      case Family::B: return ab.second;
      case Family::C: return cd.first;
      case Family::D: return cd.second;
    }
    throw std::logic_error("unknown family");
  }
};

constexpr std::array<Family, 4> kFamilies{Family::A, Family::B, Family::C, Family::D};

void compare_tables(Group& g, const CountTable& expected, const CountTable& actual, int n_max,
                    const char* expected_label, const char* actual_label) {
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      g.expect(expected.at(n, k) == actual.at(n, k), [&] {
        return entry_name(actual.family(), n, k) + ": " + expected_label + " " +
               expected.at(n, k).get_str() + ", " + actual_label + " " + actual.at(n, k).get_str();
      });
}

CheckResult diagonal_count(const Tables& dp, int n_max) {
  Group g("diagonal-count");
  for (int m = 0; 3 * m <= n_max; ++m)
    g.expect(dp.of(Family::A).at(3 * m, 0) == smotzkin_count(m),
             [&] { return entry_name(Family::A, 3 * m, 0) + " differs from C(3m,m)/(2m+1)"; });
  return g.finish("a_{3m,0} = C(3m,m)/(2m+1) for 3m <= " + std::to_string(n_max));
}

CheckResult oracle_vs_dp(const Tables& dp, int bound) {
  Group g("oracle-vs-dp");
  TablePair fwd = oracle_counts(Direction::Forward, bound);
  TablePair rev = oracle_counts(Direction::Reverse, bound);
  compare_tables(g, fwd.first, dp.of(Family::A), bound, "oracle", "dp");
  compare_tables(g, fwd.second, dp.of(Family::B), bound, "oracle", "dp");
  compare_tables(g, rev.first, dp.of(Family::C), bound, "oracle", "dp");
  compare_tables(g, rev.second, dp.of(Family::D), bound, "oracle", "dp");
  return g.finish("all four families for n <= " + std::to_string(bound));
}

CheckResult dp_vs_series(const Tables& dp, int n_max) {
  Group g("dp-vs-series");
  int k_max = std::min(10, n_max);
  for (int k = 0; k <= k_max; ++k) {
    std::array<std::pair<Family, TruncSeries>, 4> routes{
        std::pair{Family::A, f_series(k, n_max)}, std::pair{Family::B, g_series(k, n_max)},
        std::pair{Family::C, phi_series(k, n_max)}, std::pair{Family::D, psi_series(k, n_max)}};
    for (const auto& [family, series] : routes)
      for (int n = 0; n <= n_max; ++n)
        g.expect(series[n] == Rational(dp.of(family).at(n, k)), [&] {
          return entry_name(family, n, k) + ": series " + series[n].get_str() + ", dp " +
                 dp.of(family).at(n, k).get_str();
        });
  }
  return g.finish("f, g, phi, psi for k <= " + std::to_string(k_max));
}

CheckResult dp_vs_closed_form(const Tables& dp, int n_max) {
  Group g("dp-vs-closed-form");
  for (Family f : kFamilies)
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k <= n; ++k) {
        BigInt closed = closed_count(f, n, k);
        g.expect(closed == dp.of(f).at(n, k), [&] {
          return entry_name(f, n, k) + ": closed form " + closed.get_str() + ", dp " +
                 dp.of(f).at(n, k).get_str();
        });
        if (!in_residue_domain(f, n, k))
          g.expect(dp.of(f).at(n, k) == 0,
                   [&] { return entry_name(f, n, k) + " nonzero outside its residue class"; });
      }
  return g.finish("all families for n <= " + std::to_string(n_max));
}

CheckResult determinant_identities() {
  Group g("determinant-identities");
  auto d = D_sequence(10);
  for (int h = 1; h <= 10; ++h) {
    g.expect(det_exact(BandMatrixSpec{h, BandOrientation::FirstSystem}) == d[h],
             [&] { return "det(first system, h=" + std::to_string(h) + ") != D_h"; });
    g.expect(det_exact(BandMatrixSpec{h, BandOrientation::Transposed}) == d[h],
             [&] { return "det(transposed, h=" + std::to_string(h) + ") != D_h"; });
    if (h >= 2)
      g.expect(det_exact(BandMatrixSpec{h, BandOrientation::FirstSystemStar}) == D_star(h),
               [&] { return "det(star, h=" + std::to_string(h) + ") != D_{h-1} - z^3 D_{h-2}"; });
  }
  for (int n = 1; n <= 9; ++n)
    for (int i = 1; i <= n; ++i)
      g.expect(bordered_det(n, i) == bordered_det_formula(n, i), [&] {
        return "bordered D_{" + std::to_string(n) + "," + std::to_string(i) + "} != tau formula";
      });
  auto tau = tau_sequence(30);
  for (int i = 0; i <= 30; ++i)
    g.expect(tau[i] == tau_explicit(i),
             [&] { return "tau_" + std::to_string(i) + " recursion != binomial sum"; });
  return g.finish("D_h, D_h^*, bordered D_{n,i}, tau_i");
}

CheckResult cramer_stabilization(int n_max) {
  Group g("cramer-stabilization");
  int order = std::min(30, n_max);
  std::ostringstream thresholds;
  thresholds << "N=" << order << " h0(f):";
  for (int i = 0; i <= 5; ++i) {
    int size = order + i + 5;
    g.expect(cramer_f(i, size, order) == f_series(i, order), [&] {
      return "z^{2i} D_{h-i-1}/D_h^* != f_" + std::to_string(i) + " at h=" + std::to_string(size);
    });
    thresholds << ' ' << stabilize_cramer_f(i, order, size).threshold;
  }
  thresholds << " h0(psi):";
  for (int i = 0; i <= 5; ++i) {
    int size = order + i + 5;
    g.expect(cramer_psi(i, size, order) == psi_series(i, order), [&] {
      return "z^2/(1-t) D_{n,i+1}/D_n != psi_" + std::to_string(i) + " at n=" + std::to_string(size);
    });
    thresholds << ' ' << stabilize_cramer_psi(i, order, size).threshold;
  }
  return g.finish(thresholds.str());
}

CheckResult polynomial_identities() {
  Group g("polynomial-identities");
  for (int k = 0; k <= 40; ++k)
    g.expect(girard_waring_poly(k) == binet_poly(k + 1),
             [&] { return "Girard-Waring(" + std::to_string(k) + ") != S_" + std::to_string(k + 1); });
  auto tau = tau_sequence(15);
  const Poly z3_in_t{0, 1, -2, 1};
  for (int i = 1; i <= 15; ++i) {
    Poly lhs = substitute_cube(tau[i], z3_in_t) - Poly{0, 1} * substitute_cube(tau[i - 1], z3_in_t);
    g.expect(lhs == binet_poly(i),
             [&] { return "tau_i - t tau_{i-1} != S_i at i=" + std::to_string(i); });
  }
  return g.finish("Girard-Waring k <= 40, tau/Binet i <= 15");
}

CheckResult binet_numerics() {
  Group g("binet-numerics");
  for (double t : {0.1, 0.2, 0.3}) {
    RootData rd = RootData::at(t);
    double z6 = std::pow(rd.z, 6);
    g.expect(std::abs(rd.r1 * rd.r2 * rd.r3 - z6) <= 1e-12 && std::abs(rd.r1 + rd.r2 + rd.r3 - 1) <= 1e-12,
             [&] { return "Vieta fails at t=" + std::to_string(t); });
    g.expect(std::abs(rd.a + rd.b + rd.c - 1) <= 1e-12,
             [&] { return "A+B+C != 1 at t=" + std::to_string(t); });
    for (int h = 0; h <= 20; ++h) {
      double residual = binet_numeric(t, h);
      g.expect(residual <= 1e-8, [&] {
        return "relative residual " + std::to_string(residual) + " at t=" + std::to_string(t) +
               " h=" + std::to_string(h);
      });
    }
  }
  return g.finish("t in {0.1, 0.2, 0.3}, h <= 20, tol 1e-8");
}

CheckResult consistency_identities(const Tables& dp, int n_max) {
  Group g("consistency-identities");
  int order = n_max;
  TruncSeries psi0 = psi_series(0, order);
  g.expect(phi_series(0, order) == TruncSeries::one(Var::Z, order) + psi0.shifted(1),
           [] { return std::string("phi_0 != 1 + z psi_0"); });
  for (int k = 0; k <= 10; ++k)
    g.expect(g_series(k, order).shifted(1) == f_series(k + 1, order) - f_series(k + 2, order).shifted(1),
             [&] { return "z g_k != f_{k+1} - z f_{k+2} at k=" + std::to_string(k); });
  for (int n = 0; n <= n_max; ++n)
    g.expect(dp.of(Family::A).at(n, 0) == dp.of(Family::C).at(n, 0),
             [&] { return "a_{" + std::to_string(n) + ",0} != c_{" + std::to_string(n) + ",0}"; });
  return g.finish("phi_0, z g_k, a_{n,0} = c_{n,0} to order " + std::to_string(order));
}

}  // namespace

std::vector<CheckResult> run_crosscheck(const CrosscheckOptions& options) {
  if (options.n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (options.oracle_bound < 0 || options.oracle_bound > kOracleHardBound)
    throw std::invalid_argument("oracle bound must lie in [0, " + std::to_string(kOracleHardBound) + "]");

  Tables dp{ab_tables(options.n_max), cd_tables(options.n_max)};
  if (options.fault) {
    const auto& f = *options.fault;
    dp.ab.first.at_mut(f.n, f.k) += 1;
  }

  std::vector<CheckResult> results;
  results.push_back(diagonal_count(dp, options.n_max));
  results.push_back(oracle_vs_dp(dp, std::min(options.oracle_bound, options.n_max)));
  results.push_back(dp_vs_series(dp, options.n_max));
  results.push_back(dp_vs_closed_form(dp, options.n_max));
  results.push_back(determinant_identities());
  results.push_back(cramer_stabilization(options.n_max));
  results.push_back(polynomial_identities());
  results.push_back(binet_numerics());
  results.push_back(consistency_identities(dp, options.n_max));
  return results;
}

}  // namespace smotzkin
