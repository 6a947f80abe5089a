#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "smotzkin/bigint.hpp"

namespace smotzkin {

// Dense univariate polynomial with integer coefficients. The variable is
// implicit: z for determinants and tau terms, t for the Binet polynomials.
class Poly {
 public:
  Poly() = default;
  Poly(long constant);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly monomial(BigInt coeff, int exponent);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int exponent) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  Poly operator-() const;

  // Multiply by var^k.
  Poly shifted(int k) const;
  Poly pow(int e) const;

  double eval(double x) const;

  std::string to_string(char var = 'z') const;

  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

// p(z) -> sum_l c_{3l} * r^l. Throws std::invalid_argument when p has a
// nonzero coefficient at an exponent not divisible by 3.
Poly substitute_cube(const Poly& p, const Poly& r);

}  // namespace smotzkin
