#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smotzkin/bigint.hpp"
#include "smotzkin/poly.hpp"

namespace smotzkin {

// x stands for z^3.
enum class Var { Z, X };

char var_letter(Var v);

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Power series truncated after var^order, with exact rational coefficients.
class TruncSeries {
 public:
  TruncSeries(Var var, int order);
  TruncSeries(Var var, int order, std::vector<Rational> coeffs);

  static TruncSeries one(Var var, int order);
  static TruncSeries from_poly(const Poly& p, Var var, int order);

  Var var() const { return var_; }
  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int n) const { return coeffs_.at(n); }
  Rational& operator[](int n) { return coeffs_.at(n); }

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }

  // Throws SeriesError when the constant term of `divisor` is zero.
  TruncSeries divided_by(const TruncSeries& divisor) const;

  // Multiply by var^k (k >= 0), dropping terms past the order.
  TruncSeries shifted(int k) const;
  // Divide by var^k; throws SeriesError when a dropped coefficient is nonzero.
  TruncSeries unshifted(int k) const;
  TruncSeries pow(int e) const;
  TruncSeries truncated(int order) const;

  bool all_integers() const;
  bool operator==(const TruncSeries& other) const = default;

 private:
  void require_compatible(const TruncSeries& rhs) const;

  Var var_;
  int order_;
  std::vector<Rational> coeffs_;
};

enum class SeriesOp { Add, Mul, DivUnit };

// Throws SeriesError on variable mismatch or a non-unit divisor. The result
// has the smaller of the two orders.
TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op);

// Given an x-series S(x), the z-series of S(z^3) / z^shift up to z^z_order.
// Requires every coefficient that would land on a negative z-exponent to be
// zero and the x-order to cover z_order.
TruncSeries x_to_z(const TruncSeries& xs, int shift, int z_order);

// p(s) for a series s with the same truncation.
TruncSeries compose(const Poly& p, const TruncSeries& s);

// t(x) with x = t(1-t)^2, t(0) = 0, from [x^n]t = C(3n-2, n-1)/n.
TruncSeries ternary_tree_series(int order);
// The same series by iterating t <- x / (1-t)^2.
TruncSeries ternary_tree_series_fixed_point(int order);

// [x^n] t^k = (k/n) C(3n-k-1, n-k) for n >= 1; [x^0] t^k = [k == 0].
Rational coeff_t_pow(int n, int k);

// S_k = (mu3^k - mu2^k)/(mu3 - mu2) as a polynomial in t, via
// S_k = (2-t) S_{k-1} - (1-t)^2 S_{k-2}, S_0 = 0, S_1 = 1.
Poly binet_poly(int k);

// sum_{i<=k/2} (-1)^{i+k} C(k-i, i) (t-2)^{k-2i} (t-1)^{2i}, equal to S_{k+1}.
Poly girard_waring_poly(int k);

// Generating functions in z, truncated after z^order.
//   f_k   = t^k / (z^k (1-t))                        [z^n] = a_{n,k}
//   g_k   = t^{k+1} / z^{k+2}                        [z^n] = b_{n,k}
//   psi_k = t^{k+1} S_{k+1}(t) / (z^{2k+1} (1-t))    [z^n] = d_{n,k}
//   phi_0 = 1/(1-t), phi_k = psi_{k-1}/z - psi_{k-2} [z^n] = c_{n,k}
TruncSeries f_series(int k, int order);
TruncSeries g_series(int k, int order);
TruncSeries psi_series(int k, int order);
TruncSeries phi_series(int k, int order);

std::string coefficient_string(const Rational& q);

}  // namespace smotzkin
