#pragma once

#include "smotzkin/count_table.hpp"

namespace smotzkin {

// a_{n,k} = b_{n-1,k-1} + a_{n-1,k+1},  b_{n,k} = a_{n-1,k} + b_{n-1,k+1},
// a_{0,0} = 1, b_{0,0} = 0.
TablePair ab_tables(int n_max);

// c_{n,k} = c_{n-1,k-1} + d_{n-1,k},  d_{n,k} = d_{n-1,k-1} + c_{n-1,k+1},
// c_{0,0} = 1, d_{0,0} = 0.
TablePair cd_tables(int n_max);

// C(3m, m) / (2m + 1), the number of S-Motzkin paths of length 3m.
BigInt smotzkin_count(int m);

}  // namespace smotzkin
