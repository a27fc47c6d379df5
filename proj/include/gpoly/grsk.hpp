#pragma once

#include <vector>

#include "gpoly/polymer.hpp"

namespace gpoly::grsk {

// An h x n input array of positive weights w_{ij} (row-major, 0-based).
struct Matrix {
  int h = 0;
  int n = 0;
  std::vector<double> w;

  Matrix() = default;
  Matrix(int h_, int n_) : h(h_), n(n_), w(static_cast<std::size_t>(h_) * n_, 0.0) {}

  double& at(int i, int j) { return w[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
};

Matrix transpose(const Matrix& W);

// ln of the r-tuple path sum tau_r(h, k): sum over r-tuples of vertex-disjoint
// up/right lattice paths, path p running from (1, p) to (h, k-r+p) in 1-based
// coordinates, of the product of w over the union of visited cells.
// r = 0 returns 0 (empty product).  Throws budget_error beyond 1e6 tuples.
double tau_log(const Matrix& W, int k, int r);

// Output array of the geometric RSK correspondence: ln t_{ij} for every cell.
// Cells with i - j >= h - n come from the ratio ladder
//   ln t_{h-r+1, k-r+1} = ln tau_r(h,k) - ln tau_{r-1}(h,k),
// the rest from the transposed input; the overlap diagonal is cross-checked.
struct Image {
  int h = 0;
  int n = 0;
  std::vector<double> t_log;

  double at(int i, int j) const { return t_log[static_cast<std::size_t>(i) * n + j]; }
};

Image grsk_map(const Matrix& W);

// The polymer instance whose partition function inverts the corner entry:
// g_{ij} = 1 / w_{i+j-1, n-j+1} (1-based), m = h - n + 1.  Requires h >= n.
polymer::Instance complement_instance(const Matrix& W);

}  // namespace gpoly::grsk
