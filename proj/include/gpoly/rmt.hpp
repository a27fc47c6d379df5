#pragma once

#include <complex>
#include <vector>

#include "gpoly/rng.hpp"

namespace gpoly::rmt {

using cd = std::complex<double>;

// Dense Hermitian matrix, full row-major storage.  Construction mirrors the
// upper triangle onto the lower and requires a real diagonal.
class Hermitian {
 public:
  explicit Hermitian(int n);
  Hermitian(int n, std::vector<cd> entries);  // validates Hermitian symmetry

  int size() const { return n_; }
  cd& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  cd at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<cd> a_;
};

// All eigenvalues, ascending, by cyclic complex Jacobi rotations.  Supports
// n <= 64 (the rotation count is quadratic per sweep; larger sizes are out of
// scope for this code base).
std::vector<double> eigenvalues(const Hermitian& A);

// X X^* for X an n x h matrix of standard complex Gaussians
// (real and imaginary parts N(0, 1/2), so E|x|^2 = 1).
Hermitian wishart(int n, int h, RngStream& rng);

// Smallest eigenvalue of a Wishart draw; throws numerical_error if the
// computed minimum fails to be strictly positive for h >= n.
double wishart_min_eig(int n, int h, RngStream& rng);

}  // namespace gpoly::rmt
