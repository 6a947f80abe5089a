#pragma once

#include <optional>
#include <vector>

#include "smotzkin/bigint.hpp"
#include "smotzkin/path.hpp"

namespace smotzkin {

// Triangular table of counts for one family: row n holds heights 0..n.
// Reads outside the triangle return zero.
class CountTable {
 public:
  CountTable(Family family, int n_max);

  Family family() const { return family_; }
  int n_max() const { return n_max_; }

  const BigInt& at(int n, int k) const;
  BigInt& at_mut(int n, int k);

  bool operator==(const CountTable& other) const;

 private:
  Family family_;
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
};

struct TablePair {
  CountTable first;
  CountTable second;
};

struct TableMismatch {
  int n;
  int k;
  BigInt expected;
  BigInt actual;
};

// First (n, k) in row-major order where the tables differ, up to the smaller
// of the two row bounds.
std::optional<TableMismatch> first_mismatch(const CountTable& expected,
                                            const CountTable& actual);

}  // namespace smotzkin
