#pragma once

#include <vector>

#include "smotzkin/poly.hpp"
#include "smotzkin/series.hpp"

namespace smotzkin {

// Which band stencil to lay down.
//   FirstSystem      rows (-z^2, 1, -2z, z^2) around the diagonal; D_h.
//   FirstSystemStar  same, but the first row is (1, -z); D_h^*.
//   Transposed       rows (z^2, -2z, 1, -z^2); the psi system.
enum class BandOrientation { FirstSystem, FirstSystemStar, Transposed };

struct BandMatrixSpec {
  int size;
  BandOrientation orientation;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix build_matrix(const BandMatrixSpec& spec);

// Exact determinant by permutation expansion, carrying only column sets that
// can still be completed. Cost stays linear in the size for banded input.
// Sizes above 64 throw std::length_error.
Poly det_exact(const PolyMatrix& m);
Poly det_exact(const BandMatrixSpec& spec);

// D_0..D_{h_max} from D_0 = D_1 = 1, D_2 = 1 - 2z^3 and
// D_k = D_{k-1} - 2z^3 D_{k-2} + z^6 D_{k-3}.
std::vector<Poly> D_sequence(int h_max);

// D_{h-1} - z^3 D_{h-2}, h >= 2.
Poly D_star(int h);

// tau_0 = 0, tau_1 = 1, tau_2 = 2, tau_i = 2 tau_{i-1} - tau_{i-2} + z^3 tau_{i-3}.
std::vector<Poly> tau_sequence(int i_max);
// sum_{0 <= l <= (i-1)/3} C(i-l, 2l+1) z^{3l}
Poly tau_explicit(int i);

// Transposed matrix of size n with row 1 and column i cleared except for a
// single 1 at (1, i), 1-based. Throws std::out_of_range unless 1 <= i <= n.
PolyMatrix bordered_matrix(int n, int i);
Poly bordered_det(int n, int i);
// z^{i-1} tau_i D_{n-i} - z^{i+2} tau_{i-1} D_{n-i-1}, D_{-1} = 0.
Poly bordered_det_formula(int n, int i);

// z^{2i} D_{h-i-1} / D_h^* as a z-series; requires 0 <= i <= h-2.
TruncSeries cramer_f(int i, int h, int order);
// z^2/(1-t) * D_{n,i+1} / D_n as a z-series; requires 0 <= i <= n-1.
TruncSeries cramer_psi(int i, int n, int order);
// D_{n-shift} / D_n as a z-series; requires 0 <= shift <= n.
TruncSeries determinant_ratio(int shift, int n, int order);

struct Stabilization {
  // Smallest size from which every probed size reproduces the target.
  // -1 when even the largest probed size disagrees.
  int threshold = -1;
  int probed_up_to = 0;
};

Stabilization stabilize_cramer_f(int i, int order, int max_size);
Stabilization stabilize_cramer_psi(int i, int order, int max_size);

// Numeric data at a real t in (0, 1/3); W >= 0.
struct RootData {
  double t, z, w;
  double r1, r2, r3;
  double mu2, mu3;
  double a, b, c;

  // Throws std::domain_error outside (0, 1/3).
  static RootData at(double t);
};

// |D_h(z) - (A r1^h + B r2^h + C r3^h)| / max(1, |D_h(z)|).
double binet_numeric(double t, int h);

}  // namespace smotzkin
