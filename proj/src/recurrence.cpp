#include "smotzkin/recurrence.hpp"

#include <stdexcept>


namespace smotzkin {

// Heights never exceed lengths, so row n-1 is zero beyond k = n-1 and the
// triangular table is exact without any lookahead columns.

TablePair ab_tables(int n_max) {
  CountTable a(Family::A, n_max), b(Family::B, n_max);
  a.at_mut(0, 0) = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      a.at_mut(n, k) = b.at(n - 1, k - 1) + a.at(n - 1, k + 1);
      b.at_mut(n, k) = a.at(n - 1, k) + b.at(n - 1, k + 1);
    }
  }
  return {std::move(a), std::move(b)};
}

TablePair cd_tables(int n_max) {
  CountTable c(Family::C, n_max), d(Family::D, n_max);
  c.at_mut(0, 0) = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.at_mut(n, k) = c.at(n - 1, k - 1) + d.at(n - 1, k);
      d.at_mut(n, k) = d.at(n - 1, k - 1) + c.at(n - 1, k + 1);
    }
  }
  return {std::move(c), std::move(d)};
}

BigInt smotzkin_count(int m) {
  if (m < 0) throw std::invalid_argument("smotzkin_count: m must be non-negative");
  BigInt central;
  mpz_bin_uiui(central.get_mpz_t(), 3UL * static_cast<unsigned long>(m),
               static_cast<unsigned long>(m));
  BigInt denom = 2 * m + 1;
  if (!mpz_divisible_p(central.get_mpz_t(), denom.get_mpz_t()))
    throw std::logic_error("C(3m, m) not divisible by 2m+1");
  BigInt out;
  mpz_divexact(out.get_mpz_t(), central.get_mpz_t(), denom.get_mpz_t());
  return out;
}

}  // namespace smotzkin
