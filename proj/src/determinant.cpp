#include "smotzkin/determinant.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace smotzkin {

namespace {

const Poly kMinusZSq{0, 0, -1};
const Poly kMinusTwoZ{0, -2};
const Poly kZSq{0, 0, 1};
const Poly kMinusZ{0, -1};

Poly z_pow(int e) { return Poly::monomial(1, e); }

TruncSeries one_over_one_minus_t_in_z(int order) {
  TruncSeries t = ternary_tree_series(std::max(1, order / 3));
  TruncSeries one = TruncSeries::one(Var::X, t.order());
  return x_to_z(one.divided_by(one - t), 0, order);
}

}  // namespace

PolyMatrix build_matrix(const BandMatrixSpec& spec) {
  const int h = spec.size;
  if (h < 0) throw std::invalid_argument("matrix size must be non-negative");
  PolyMatrix m(h, std::vector<Poly>(h));
  for (int r = 0; r < h; ++r) {
    if (r - 1 >= 0) m[r][r - 1] = kMinusZSq;
    m[r][r] = 1;
    if (r + 1 < h) m[r][r + 1] = kMinusTwoZ;
    if (r + 2 < h) m[r][r + 2] = kZSq;
  }
  switch (spec.orientation) {
    case BandOrientation::FirstSystem:
      break;
    case BandOrientation::FirstSystemStar:
      if (h > 0) {
        for (auto& entry : m[0]) entry = Poly();
        m[0][0] = 1;
        if (h > 1) m[0][1] = kMinusZ;
      }
      break;
    case BandOrientation::Transposed: {
      PolyMatrix t(h, std::vector<Poly>(h));
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < h; ++c) t[r][c] = m[c][r];
      m = std::move(t);
      break;
    }
  }
  return m;
}

Poly det_exact(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det_exact: matrix not square");
  if (n == 0) return 1;
  if (n > 64) throw std::length_error("det_exact: size above 64");

  // required[r]: columns with no nonzero entry below row r; every partial
  // assignment of rows 0..r must already cover them.
  std::vector<std::uint64_t> required(n, 0);
  for (int c = 0; c < n; ++c) {
    int last = -1;
    for (int r = 0; r < n; ++r)
      if (!m[r][c].is_zero()) last = r;
    if (last < 0) return {};
    for (int r = last; r < n; ++r) required[r] |= std::uint64_t{1} << c;
  }

  std::map<std::uint64_t, Poly> states{{0, Poly(1)}};
  for (int r = 0; r < n; ++r) {
    std::map<std::uint64_t, Poly> next;
    for (const auto& [mask, value] : states) {
      for (int c = 0; c < n; ++c) {
        std::uint64_t bit = std::uint64_t{1} << c;
        if ((mask & bit) || m[r][c].is_zero()) continue;
        std::uint64_t grown = mask | bit;
        if ((grown & required[r]) != required[r]) continue;
        // Earlier rows sitting in later columns are inversions.
        int inversions = std::popcount(mask >> c);
        Poly term = value * m[r][c];
        if (inversions % 2 != 0) next[grown] -= term;
        else next[grown] += term;
      }
    }
    states = std::move(next);
  }
  auto full = states.find(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return full == states.end() ? Poly() : full->second;
}

Poly det_exact(const BandMatrixSpec& spec) { return det_exact(build_matrix(spec)); }

std::vector<Poly> D_sequence(int h_max) {
  if (h_max < 0) throw std::invalid_argument("D_sequence expects h_max >= 0");
  std::vector<Poly> d{Poly(1), Poly(1), Poly{1, 0, 0, -2}};
  d.resize(std::max(3, h_max + 1));
  const Poly two_z3 = Poly::monomial(2, 3);
  const Poly z6 = z_pow(6);
  for (int k = 3; k <= h_max; ++k) d[k] = d[k - 1] - two_z3 * d[k - 2] + z6 * d[k - 3];
  d.resize(static_cast<std::size_t>(h_max) + 1);
  return d;
}

Poly D_star(int h) {
  if (h < 2) throw std::invalid_argument("D_star expects h >= 2");
  auto d = D_sequence(h - 1);
  return d[h - 1] - z_pow(3) * d[h - 2];
}

std::vector<Poly> tau_sequence(int i_max) {
  if (i_max < 0) throw std::invalid_argument("tau_sequence expects i_max >= 0");
  std::vector<Poly> tau{Poly(0), Poly(1), Poly(2)};
  tau.resize(std::max(3, i_max + 1));
  const Poly z3 = z_pow(3);
  for (int i = 3; i <= i_max; ++i) tau[i] = Poly(2) * tau[i - 1] - tau[i - 2] + z3 * tau[i - 3];
  tau.resize(static_cast<std::size_t>(i_max) + 1);
  return tau;
}

Poly tau_explicit(int i) {
  if (i < 0) throw std::invalid_argument("tau_explicit expects i >= 0");
  Poly sum;
  for (int l = 0; 3 * l <= i - 1; ++l) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i - l), static_cast<unsigned long>(2 * l + 1));
    sum += Poly::monomial(c, 3 * l);
  }
  return sum;
}

PolyMatrix bordered_matrix(int n, int i) {
  if (n < 1 || i < 1 || i > n)
    throw std::out_of_range("bordered_det: need 1 <= i <= n, got n=" + std::to_string(n) +
                            " i=" + std::to_string(i));
  PolyMatrix m = build_matrix({n, BandOrientation::Transposed});
  for (int c = 0; c < n; ++c) m[0][c] = Poly();
  for (int r = 0; r < n; ++r) m[r][i - 1] = Poly();
  m[0][i - 1] = 1;
  return m;
}

Poly bordered_det(int n, int i) { return det_exact(bordered_matrix(n, i)); }

Poly bordered_det_formula(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::out_of_range("bordered_det_formula: need 1 <= i <= n");
  auto d = D_sequence(n);
  auto tau = tau_sequence(i);
  auto d_at = [&](int j) { return j < 0 ? Poly() : d[j]; };
  return z_pow(i - 1) * tau[i] * d_at(n - i) - z_pow(i + 2) * tau[i - 1] * d_at(n - i - 1);
}

TruncSeries cramer_f(int i, int h, int order) {
  if (i < 0 || i > h - 2) throw std::invalid_argument("cramer_f: need 0 <= i <= h-2");
  auto d = D_sequence(h);
  Poly numerator = z_pow(2 * i) * d[h - i - 1];
  Poly denominator = d[h - 1] - z_pow(3) * d[h - 2];
  return TruncSeries::from_poly(numerator, Var::Z, order)
      .divided_by(TruncSeries::from_poly(denominator, Var::Z, order));
}

TruncSeries cramer_psi(int i, int n, int order) {
  if (i < 0 || i > n - 1) throw std::invalid_argument("cramer_psi: need 0 <= i <= n-1");
  Poly border = bordered_det(n, i + 1);
  Poly d_n = D_sequence(n)[n];
  TruncSeries ratio = TruncSeries::from_poly(border, Var::Z, order)
                          .divided_by(TruncSeries::from_poly(d_n, Var::Z, order));
  // The psi system has right-hand side z^2 phi_0 e_1 with phi_0 = 1/(1-t).
  return one_over_one_minus_t_in_z(order).shifted(2) * ratio;
}

TruncSeries determinant_ratio(int shift, int n, int order) {
  if (shift < 0 || shift > n) throw std::invalid_argument("determinant_ratio: need 0 <= shift <= n");
  auto d = D_sequence(n);
  return TruncSeries::from_poly(d[n - shift], Var::Z, order)
      .divided_by(TruncSeries::from_poly(d[n], Var::Z, order));
}

Stabilization stabilize_cramer_f(int i, int order, int max_size) {
  TruncSeries target = f_series(i, order);
  Stabilization out;
  out.probed_up_to = max_size;
  for (int h = max_size; h >= i + 2; --h) {
    if (!(cramer_f(i, h, order) == target)) break;
    out.threshold = h;
  }
  return out;
}

Stabilization stabilize_cramer_psi(int i, int order, int max_size) {
  TruncSeries target = psi_series(i, order);
  Stabilization out;
  out.probed_up_to = max_size;
  for (int n = max_size; n >= i + 1; --n) {
    if (!(cramer_psi(i, n, order) == target)) break;
    out.threshold = n;
  }
  return out;
}

RootData RootData::at(double t) {
  if (!(t > 0.0 && t < 1.0 / 3.0)) throw std::domain_error("RootData: t must lie in (0, 1/3)");
  RootData rd{};
  rd.t = t;
  rd.z = std::cbrt(t * (1 - t) * (1 - t));
  rd.w = std::sqrt(4 * t - 3 * t * t);
  rd.r1 = (t - 1) * (t - 1);
  rd.r2 = t / 2 * (2 - t + rd.w);
  rd.r3 = t / 2 * (2 - t - rd.w);
  rd.mu2 = (-t + 2 - rd.w) / 2;
  rd.mu3 = (-t + 2 + rd.w) / 2;
  double denom = (3 * t - 1) * (3 * t - 4);
  rd.a = (t - 1) / (3 * t - 1);
  rd.b = (3 * t * t - 4 * t - rd.w) / denom;
  rd.c = (3 * t * t - 4 * t + rd.w) / denom;
  return rd;
}

double binet_numeric(double t, int h) {
  if (h < 0) throw std::invalid_argument("binet_numeric expects h >= 0");
  RootData rd = RootData::at(t);
  double exact = D_sequence(h)[h].eval(rd.z);
  double binet = rd.a * std::pow(rd.r1, h) + rd.b * std::pow(rd.r2, h) + rd.c * std::pow(rd.r3, h);
  return std::abs(exact - binet) / std::max(1.0, std::abs(exact));
}

}  // namespace smotzkin
