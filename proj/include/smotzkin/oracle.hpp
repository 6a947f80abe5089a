#pragma once

#include "smotzkin/count_table.hpp"

namespace smotzkin {

inline constexpr int kOracleHardBound = 16;

// Exhaustive depth-first enumeration of valid paths with prefix pruning.
// Forward returns (A, B), reverse returns (C, D). Throws std::length_error
// when n_max exceeds `bound`.
TablePair oracle_counts(Direction direction, int n_max,
                        int bound = kOracleHardBound);

}  // namespace smotzkin
