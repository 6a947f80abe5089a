#include "smotzkin/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace smotzkin {

namespace {

int mod3(int v) { return ((v % 3) + 3) % 3; }

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

// [t^m] (1-3t) / (1-t)^e with the upper indices already reduced.
BigInt extraction(long top, long m) { return binom_safe(top, m) - 3 * binom_safe(top - 1, m - 1); }

}  // namespace

BigInt binom_safe(long m, long r) {
  if (m < 0) throw std::domain_error("binom_safe: negative upper index " + std::to_string(m));
  if (r < 0 || r > m) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return out;
}

bool in_residue_domain(Family family, int n, int k) {
  if (n < 0 || k < 0) return false;
  switch (family) {
    case Family::A: return mod3(n - 2 * k) == 0 && n >= k;
    case Family::B: return mod3(n - 2 * k - 1) == 0 && n >= 2 * k + 1;
    case Family::C: return mod3(n - k) == 0;
    case Family::D: return mod3(n - k + 1) == 0;
  }
  return false;
}

BigInt a_closed(int n, int k) {
  if (!in_residue_domain(Family::A, n, k)) return 0;
  long m = (n - 2L * k) / 3;
  return extraction(n + 1L, m);
}

BigInt a_closed_shifted(int n, int k) {
  if (!in_residue_domain(Family::A, n, k)) return 0;
  long m = (n - 2L * k) / 3;
  return binom_safe(n + 1L, m - 1) - 3 * binom_safe(n, m - 2);
}

BigInt b_closed(int n, int k) {
  if (!in_residue_domain(Family::B, n, k)) return 0;
  long m = (n - 2L * k - 1) / 3;
  return extraction(n + 1L, m);
}

BigInt d_closed(int n, int k) {
  if (!in_residue_domain(Family::D, n, k)) return 0;
  long q = (n - k + 1L) / 3 - 1;
  BigInt sum = 0;
  for (int i = 0; 2 * i <= k; ++i) {
    BigInt outer = binom_safe(k - i, i);
    for (int j = 0; j <= k - 2 * i; ++j) {
      int big_m = 2 * i + j - 1;
      // Upper index n+k-M stays >= n+1 because M <= k-1.
      BigInt term = outer * binom_safe(k - 2 * i, j) * extraction(static_cast<long>(n) + k - big_m, q);
      sum += sign(i + j + 1) * sign(big_m) * term;
    }
  }
  return sum;
}

BigInt c_closed(int n, int k) {
  if (!in_residue_domain(Family::C, n, k)) return 0;
  if (k == 0) return a_closed(n, 0);
  if (k == 1) return d_closed(n + 1, 0);
  return d_closed(n + 1, k - 1) - d_closed(n, k - 2);
}

BigInt closed_count(Family family, int n, int k) {
  switch (family) {
    case Family::A: return a_closed(n, k);
    case Family::B: return b_closed(n, k);
    case Family::C: return c_closed(n, k);
    case Family::D: return d_closed(n, k);
  }
  return 0;
}

}  // namespace smotzkin
