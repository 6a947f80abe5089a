#include <doctest.h>

#include "smotzkin/closed_form.hpp"
#include "smotzkin/recurrence.hpp"

using namespace smotzkin;

TEST_CASE("binom_safe") {
  CHECK(binom_safe(5, 2) == 10);
  CHECK(binom_safe(3, -1) == 0);
  CHECK(binom_safe(4, 7) == 0);
  CHECK(binom_safe(0, 0) == 1);
  CHECK_THROWS_AS(binom_safe(-1, 0), std::domain_error);
}

TEST_CASE("residue domains") {
  CHECK(in_residue_domain(Family::A, 0, 0));
  CHECK(in_residue_domain(Family::A, 4, 2));
  CHECK_FALSE(in_residue_domain(Family::A, 3, 1));
  CHECK(in_residue_domain(Family::B, 1, 0));
  CHECK_FALSE(in_residue_domain(Family::B, 1, 1));
  CHECK(in_residue_domain(Family::C, 1, 1));
  CHECK(in_residue_domain(Family::C, 2, 2));
  CHECK(in_residue_domain(Family::D, 2, 0));
  CHECK_FALSE(in_residue_domain(Family::D, 3, 0));
  CHECK_FALSE(in_residue_domain(Family::C, -1, 0));
}

TEST_CASE("a closed form") {
  CHECK(a_closed(0, 0) == 1);
  CHECK(a_closed(6, 0) == 3);
  CHECK(a_closed(4, 2) == 1);
  CHECK(a_closed(5, 0) == 0);
  // The variant shifted by one in m disagrees with the counts.
  CHECK(a_closed_shifted(0, 0) == 0);
  CHECK(a_closed_shifted(6, 0) == 4);
}

TEST_CASE("b closed form") {
  CHECK(b_closed(1, 0) == 1);
  CHECK(b_closed(4, 0) == 2);
  CHECK(b_closed(3, 1) == 1);
  CHECK(b_closed(2, 0) == 0);
}

TEST_CASE("d closed form") {
  CHECK(d_closed(2, 0) == 1);
  CHECK(d_closed(3, 1) == 2);
  CHECK(d_closed(5, 0) == 3);
  CHECK(d_closed(0, 0) == 0);
  CHECK(d_closed(1, 2) == 0);
}

TEST_CASE("c closed form") {
  CHECK(c_closed(3, 0) == 1);
  CHECK(c_closed(1, 1) == 1);
  CHECK(c_closed(2, 2) == 1);
  CHECK(c_closed(0, 0) == 1);
}

TEST_CASE("closed forms equal the DP tables for n <= 120") {
  const int n_max = 120;
  auto ab = ab_tables(n_max);
  auto cd = cd_tables(n_max);
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(a_closed(n, k) == ab.first.at(n, k));
      CHECK(b_closed(n, k) == ab.second.at(n, k));
      CHECK(c_closed(n, k) == cd.first.at(n, k));
      CHECK(d_closed(n, k) == cd.second.at(n, k));
      for (Family f : {Family::A, Family::B, Family::C, Family::D})
        if (!in_residue_domain(f, n, k)) CHECK(closed_count(f, n, k) == 0);
    }
  for (int m = 0; m <= 40; ++m) CHECK(a_closed(3 * m, 0) == smotzkin_count(m));
}
