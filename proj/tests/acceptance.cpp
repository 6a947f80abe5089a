// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "smotzkin/closed_form.hpp"
#include "smotzkin/determinant.hpp"
#include "smotzkin/oracle.hpp"
#include "smotzkin/recurrence.hpp"
#include "smotzkin/series.hpp"

using namespace smotzkin;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      note = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string nk(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

Outcome diagonal_count() {
  Outcome o;
  auto ab = ab_tables(180);
  for (int m = 0; m <= 60; ++m) {
    BigInt central;
    mpz_bin_uiui(central.get_mpz_t(), 3UL * m, static_cast<unsigned long>(m));
    o.require(central % (2 * m + 1) == 0, "C(3m,m) not divisible at m=" + std::to_string(m));
    o.require(ab.first.at(3 * m, 0) == central / (2 * m + 1), "a_{3m,0} mismatch at m=" + std::to_string(m));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto ab = ab_tables(14);
  auto cd = cd_tables(14);
  auto fwd = oracle_counts(Direction::Forward, 14);
  auto rev = oracle_counts(Direction::Reverse, 14);
  for (auto [oracle, dp] : {std::pair{&fwd.first, &ab.first}, std::pair{&fwd.second, &ab.second},
                            std::pair{&rev.first, &cd.first}, std::pair{&rev.second, &cd.second}}) {
    auto mm = first_mismatch(*oracle, *dp);
    if (mm) o.require(false, std::string(1, family_letter(dp->family())) + nk(mm->n, mm->k));
  }
  return o;
}

Outcome series_equivalence() {
  Outcome o;
  const int n_max = 60;
  auto ab = ab_tables(n_max);
  auto cd = cd_tables(n_max);
  for (int k = 0; k <= 10; ++k) {
    auto f = f_series(k, n_max), g = g_series(k, n_max);
    auto phi = phi_series(k, n_max), psi = psi_series(k, n_max);
    for (int n = 0; n <= n_max; ++n) {
      o.require(f[n] == Rational(ab.first.at(n, k)), "f" + nk(n, k));
      o.require(g[n] == Rational(ab.second.at(n, k)), "g" + nk(n, k));
      o.require(phi[n] == Rational(cd.first.at(n, k)), "phi" + nk(n, k));
      o.require(psi[n] == Rational(cd.second.at(n, k)), "psi" + nk(n, k));
    }
  }
  return o;
}

Outcome closed_form_equivalence() {
  Outcome o;
  const int n_max = 120;
  auto ab = ab_tables(n_max);
  auto cd = cd_tables(n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      o.require(a_closed(n, k) == ab.first.at(n, k), "a" + nk(n, k));
      o.require(b_closed(n, k) == ab.second.at(n, k), "b" + nk(n, k));
      o.require(c_closed(n, k) == cd.first.at(n, k), "c" + nk(n, k));
      o.require(d_closed(n, k) == cd.second.at(n, k), "d" + nk(n, k));
    }
  o.require(a_closed(0, 0) == 1 && a_closed_shifted(0, 0) == 0, "a(0,0) correction");
  o.require(a_closed(6, 0) == 3 && a_closed_shifted(6, 0) == 4, "a(6,0) correction");
  return o;
}

Outcome determinant_recursion() {
  Outcome o;
  auto d = D_sequence(10);
  for (int h = 1; h <= 10; ++h) {
    o.require(det_exact(BandMatrixSpec{h, BandOrientation::FirstSystem}) == d[h], "D_" + std::to_string(h));
    if (h >= 2)
      o.require(det_exact(BandMatrixSpec{h, BandOrientation::FirstSystemStar}) == D_star(h),
                "D*_" + std::to_string(h));
  }
  return o;
}

Outcome bordered_identity() {
  Outcome o;
  for (int n = 1; n <= 9; ++n)
    for (int i = 1; i <= n; ++i) o.require(bordered_det(n, i) == bordered_det_formula(n, i), "D_{n,i}" + nk(n, i));
  return o;
}

Outcome cramer_stabilization() {
  Outcome o;
  const int order = 30;
  std::ostringstream note;
  note << "h0(f) =";
  for (int i = 0; i <= 5; ++i) {
    int h = order + i + 5;
    o.require(cramer_f(i, h, order) == f_series(i, order), "f route i=" + std::to_string(i));
    note << ' ' << stabilize_cramer_f(i, order, h).threshold;
  }
  note << "; h0(psi) =";
  for (int i = 0; i <= 5; ++i) {
    int n = order + i + 5;
    o.require(cramer_psi(i, n, order) == psi_series(i, order), "psi route i=" + std::to_string(i));
    note << ' ' << stabilize_cramer_psi(i, order, n).threshold;
  }
  if (o.passed) o.note = note.str();
  return o;
}

Outcome binet_numerics() {
  Outcome o;
  double worst = 0.0;
  for (double t : {0.1, 0.2, 0.3})
    for (int h = 0; h <= 20; ++h) {
      double r = binet_numeric(t, h);
      worst = std::max(worst, r);
      o.require(r <= 1e-8, "t=" + std::to_string(t) + " h=" + std::to_string(h));
    }
  if (o.passed) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max residual %.3e", worst);
    o.note = buf;
  }
  return o;
}

Outcome polynomial_identities() {
  Outcome o;
  for (int k = 0; k <= 40; ++k)
    o.require(girard_waring_poly(k) == binet_poly(k + 1), "Girard-Waring k=" + std::to_string(k));
  auto tau = tau_sequence(15);
  const Poly z3{0, 1, -2, 1};
  for (int i = 1; i <= 15; ++i)
    o.require(substitute_cube(tau[i], z3) - Poly{0, 1} * substitute_cube(tau[i - 1], z3) == binet_poly(i),
              "tau/Binet i=" + std::to_string(i));
  return o;
}

Outcome consistency_identities() {
  Outcome o;
  const int order = 60;
  o.require(phi_series(0, order) == TruncSeries::one(Var::Z, order) + psi_series(0, order).shifted(1),
            "phi_0 = 1 + z psi_0");
  for (int k = 0; k <= 10; ++k)
    o.require(g_series(k, order).shifted(1) == f_series(k + 1, order) - f_series(k + 2, order).shifted(1),
              "z g_k at k=" + std::to_string(k));
  auto ab = ab_tables(120);
  auto cd = cd_tables(120);
  for (int n = 0; n <= 120; ++n) o.require(ab.first.at(n, 0) == cd.first.at(n, 0), "a_{n,0} = c_{n,0} n=" + std::to_string(n));
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "diagonal count a_{3m,0} = C(3m,m)/(2m+1), m <= 60", 1.0, diagonal_count},
      {2, "oracle equals DP, n <= 14, four families", 30.0, oracle_equivalence},
      {3, "series equal DP, k <= 10, n <= 60", 10.0, series_equivalence},
      {4, "closed forms equal DP, n <= 120", 60.0, closed_form_equivalence},
      {5, "det_exact equals D_h and D_h^*, h <= 10", 60.0, determinant_recursion},
      {6, "bordered determinant tau identity, n <= 9", 60.0, bordered_identity},
      {7, "Cramer quotients stabilize to f_i and psi_i, N = 30, i <= 5", 60.0, cramer_stabilization},
      {8, "Binet decomposition of D_h, t in {0.1,0.2,0.3}, h <= 20, tol 1e-8", 60.0, binet_numerics},
      {9, "Girard-Waring = Binet (k <= 40), tau/Binet (i <= 15)", 60.0, polynomial_identities},
      {10, "phi_0 = 1 + z psi_0, z g_k = f_{k+1} - z f_{k+2}, a_{n,0} = c_{n,0}", 60.0, consistency_identities},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && secs > c.budget_seconds) {
      o.passed = false;
      o.note = "over the runtime budget";
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %2d. %s (%.3fs)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.note.empty() ? "" : " - ", o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
