#include "smotzkin/count_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace smotzkin {

CountTable::CountTable(Family family, int n_max) : family_(family), n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows_[n].assign(static_cast<std::size_t>(n) + 1, 0);
}

const BigInt& CountTable::at(int n, int k) const {
  static const BigInt kZero = 0;
  if (n < 0 || n > n_max_ || k < 0 || k > n) return kZero;
  return rows_[n][k];
}

BigInt& CountTable::at_mut(int n, int k) {
  if (n < 0 || n > n_max_ || k < 0 || k > n)
    throw std::out_of_range("count table index outside the triangle");
  return rows_[n][k];
}

bool CountTable::operator==(const CountTable& other) const {
  return family_ == other.family_ && n_max_ == other.n_max_ && rows_ == other.rows_;
}

std::optional<TableMismatch> first_mismatch(const CountTable& expected,
                                            const CountTable& actual) {
  int n_max = std::min(expected.n_max(), actual.n_max());
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      if (expected.at(n, k) != actual.at(n, k))
        return TableMismatch{n, k, expected.at(n, k), actual.at(n, k)};
  return std::nullopt;
}

}  // namespace smotzkin
