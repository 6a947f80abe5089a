#include "smotzkin/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace smotzkin {

Poly::Poly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::monomial(BigInt coeff, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1, 0);
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

BigInt Poly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[exponent];
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted expects k >= 0");
  if (is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(c));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow expects e >= 0");
  Poly out(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e <= degree(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) out << mag.get_str();
    if (e > 0) out << var;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

Poly substitute_cube(const Poly& p, const Poly& r) {
  Poly out;
  Poly power(1);
  for (int e = 0; e <= p.degree(); e += 3) {
    for (int off = 1; off < 3; ++off)
      if (p.coeff(e + off) != 0)
        throw std::invalid_argument("substitute_cube: exponent " + std::to_string(e + off) +
                                    " is not a multiple of 3");
    BigInt c = p.coeff(e);
    if (c != 0) out += power * Poly(std::vector<BigInt>{c});
    power *= r;
  }
  return out;
}

}  // namespace smotzkin
