#include "smotzkin/series.hpp"

#include <algorithm>

#include "smotzkin/closed_form.hpp"

namespace smotzkin {

char var_letter(Var v) { return v == Var::Z ? 'z' : 'x'; }

TruncSeries::TruncSeries(Var var, int order) : var_(var), order_(order) {
  if (order < 0) throw SeriesError("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncSeries::TruncSeries(Var var, int order, std::vector<Rational> coeffs)
    : TruncSeries(var, order) {
  if (coeffs.size() > coeffs_.size()) throw SeriesError("more coefficients than the order allows");
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

TruncSeries TruncSeries::one(Var var, int order) {
  TruncSeries s(var, order);
  s.coeffs_[0] = 1;
  return s;
}

TruncSeries TruncSeries::from_poly(const Poly& p, Var var, int order) {
  TruncSeries s(var, order);
  for (int e = 0; e <= std::min(order, p.degree()); ++e) s.coeffs_[e] = p.coeff(e);
  return s;
}

void TruncSeries::require_compatible(const TruncSeries& rhs) const {
  if (var_ != rhs.var_)
    throw SeriesError(std::string("series variable mismatch: ") + var_letter(var_) + " vs " +
                      var_letter(rhs.var_));
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > order_) throw SeriesError("cannot extend a truncated series");
  TruncSeries s(var_, order);
  std::copy_n(coeffs_.begin(), order + 1, s.coeffs_.begin());
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_compatible(rhs);
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int n = 0; n <= order_; ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_compatible(rhs);
  if (rhs.order_ < order_) *this = truncated(rhs.order_);
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  require_compatible(rhs);
  int order = std::min(order_, rhs.order_);
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, 0);
  for (int i = 0; i <= order; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  order_ = order;
  coeffs_ = std::move(out);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& q : coeffs_) q *= c;
  return *this;
}

TruncSeries TruncSeries::divided_by(const TruncSeries& divisor) const {
  require_compatible(divisor);
  if (divisor.coeffs_[0] == 0) throw SeriesError("division by a series without constant term");
  int order = std::min(order_, divisor.order_);
  TruncSeries q(var_, order);
  for (int n = 0; n <= order; ++n) {
    Rational acc = coeffs_[n];
    for (int j = 1; j <= n; ++j) acc -= divisor.coeffs_[j] * q.coeffs_[n - j];
    q.coeffs_[n] = acc / divisor.coeffs_[0];
  }
  return q;
}

TruncSeries TruncSeries::shifted(int k) const {
  if (k < 0) throw SeriesError("shifted expects k >= 0");
  TruncSeries s(var_, order_);
  for (int n = k; n <= order_; ++n) s.coeffs_[n] = coeffs_[n - k];
  return s;
}

TruncSeries TruncSeries::unshifted(int k) const {
  if (k < 0 || k > order_) throw SeriesError("unshifted: shift outside the order");
  for (int n = 0; n < k; ++n)
    if (coeffs_[n] != 0) throw SeriesError("unshifted: series not divisible by the shift");
  TruncSeries s(var_, order_ - k);
  for (int n = 0; n <= order_ - k; ++n) s.coeffs_[n] = coeffs_[n + k];
  return s;
}

TruncSeries TruncSeries::pow(int e) const {
  if (e < 0) throw SeriesError("negative power");
  TruncSeries out = one(var_, order_);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

bool TruncSeries::all_integers() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Mul: return a * b;
    case SeriesOp::DivUnit: return a.divided_by(b);
  }
  throw SeriesError("unknown series op");
}

TruncSeries x_to_z(const TruncSeries& xs, int shift, int z_order) {
  if (xs.var() != Var::X) throw SeriesError("x_to_z expects an x-series");
  if (shift < 0) throw SeriesError("x_to_z expects a non-negative shift");
  if ((z_order + shift) / 3 > xs.order())
    throw SeriesError("x-series order too small for the requested z-order");
  for (int m = 0; 3 * m < shift && m <= xs.order(); ++m)
    if (xs[m] != 0) throw SeriesError("x-series has terms below z^" + std::to_string(shift));
  TruncSeries out(Var::Z, z_order);
  for (int n = 0; n <= z_order; ++n)
    if ((n + shift) % 3 == 0) out[n] = xs[(n + shift) / 3];
  return out;
}

TruncSeries compose(const Poly& p, const TruncSeries& s) {
  TruncSeries acc(s.var(), s.order());
  for (int e = p.degree(); e >= 0; --e) {
    acc *= s;
    acc[0] += Rational(p.coeff(e));
  }
  return acc;
}

Rational coeff_t_pow(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("coeff_t_pow expects n, k >= 0");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || k > n) return 0;
  Rational q(binom_safe(3L * n - k - 1, n - k) * k, n);
  q.canonicalize();
  return q;
}

TruncSeries ternary_tree_series(int order) {
  if (order < 1) throw SeriesError("ternary_tree_series expects order >= 1");
  TruncSeries t(Var::X, order);
  for (int n = 1; n <= order; ++n) t[n] = coeff_t_pow(n, 1);
  return t;
}

TruncSeries ternary_tree_series_fixed_point(int order) {
  if (order < 1) throw SeriesError("ternary_tree_series_fixed_point expects order >= 1");
  TruncSeries x = TruncSeries::one(Var::X, order).shifted(1);
  TruncSeries t(Var::X, order);
  // Each pass fixes one more coefficient.
  for (int pass = 0; pass < order; ++pass) {
    TruncSeries one_minus_t = TruncSeries::one(Var::X, order) - t;
    t = x.divided_by(one_minus_t * one_minus_t);
  }
  return t;
}

Poly binet_poly(int k) {
  if (k < 0) throw std::invalid_argument("binet_poly expects k >= 0");
  const Poly two_minus_t{2, -1};
  const Poly one_minus_t_sq{1, -2, 1};
  Poly prev(0), cur(1);
  if (k == 0) return prev;
  for (int i = 2; i <= k; ++i) {
    Poly next = two_minus_t * cur - one_minus_t_sq * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly girard_waring_poly(int k) {
  if (k < 0) throw std::invalid_argument("girard_waring_poly expects k >= 0");
  const Poly t_minus_2{-2, 1};
  const Poly t_minus_1{-1, 1};
  Poly sum;
  for (int i = 0; 2 * i <= k; ++i) {
    BigInt c = binom_safe(k - i, i);
    if ((i + k) % 2 != 0) c = -c;
    sum += Poly(std::vector<BigInt>{c}) * t_minus_2.pow(k - 2 * i) * t_minus_1.pow(2 * i);
  }
  return sum;
}

namespace {

// Enough x-terms to cover z^order after dividing by z^shift.
int x_order_for(int order, int shift) { return std::max(1, (order + shift) / 3); }

TruncSeries inverse_one_minus(const TruncSeries& t) {
  TruncSeries one = TruncSeries::one(t.var(), t.order());
  return one.divided_by(one - t);
}

}  // namespace

TruncSeries f_series(int k, int order) {
  if (k < 0) throw std::invalid_argument("f_series expects k >= 0");
  TruncSeries t = ternary_tree_series(x_order_for(order, k));
  return x_to_z(t.pow(k) * inverse_one_minus(t), k, order);
}

TruncSeries g_series(int k, int order) {
  if (k < 0) throw std::invalid_argument("g_series expects k >= 0");
  TruncSeries t = ternary_tree_series(x_order_for(order, k + 2));
  return x_to_z(t.pow(k + 1), k + 2, order);
}

TruncSeries psi_series(int k, int order) {
  if (k < 0) throw std::invalid_argument("psi_series expects k >= 0");
  int shift = 2 * k + 1;
  TruncSeries t = ternary_tree_series(x_order_for(order, shift));
  TruncSeries body = t.pow(k + 1) * compose(binet_poly(k + 1), t) * inverse_one_minus(t);
  return x_to_z(body, shift, order);
}

TruncSeries phi_series(int k, int order) {
  if (k < 0) throw std::invalid_argument("phi_series expects k >= 0");
  if (k == 0) {
    TruncSeries t = ternary_tree_series(x_order_for(order, 0));
    return x_to_z(inverse_one_minus(t), 0, order);
  }
  TruncSeries lead = psi_series(k - 1, order + 1).unshifted(1);
  if (k == 1) return lead;
  return lead - psi_series(k - 2, order);
}

std::string coefficient_string(const Rational& q) { return q.get_str(); }

}  // namespace smotzkin
