#pragma once

#include "smotzkin/bigint.hpp"
#include "smotzkin/path.hpp"

namespace smotzkin {

// C(m, r) for m >= 0, zero when r < 0 or r > m. Throws std::domain_error
// for m < 0.
BigInt binom_safe(long m, long r);

// Residue classes outside of which a family has no paths:
//   A: n = 2k (mod 3), n >= k      B: n = 2k+1 (mod 3), n >= 2k+1
//   C: n = k (mod 3)               D: n = k-1 (mod 3)
bool in_residue_domain(Family family, int n, int k);

// With m = (n-2k)/3: C(n+1, m) - 3 C(n, m-1).
BigInt a_closed(int n, int k);
// The variant C(n+1, m-1) - 3 C(n, m-2), which is off by one in m. Kept to
// document where it disagrees with the counts.
BigInt a_closed_shifted(int n, int k);
// With m = (n-2k-1)/3: C(n+1, m) - 3 C(n, m-1).
BigInt b_closed(int n, int k);
// Double sum over i <= k/2, j <= k-2i of
//   (-1)^{i+j+1} C(k-i, i) C(k-2i, j) [z^{n+2k+1}] t^{k+1} (t-1)^M,
// M = 2i+j-1, where the extraction equals
//   (-1)^M [C(n+k-M, q) - 3 C(n+k-M-1, q-1)],  q = (n-k+1)/3 - 1.
BigInt d_closed(int n, int k);
// From phi_k = psi_{k-1}/z - psi_{k-2}.
BigInt c_closed(int n, int k);

BigInt closed_count(Family family, int n, int k);

}  // namespace smotzkin
