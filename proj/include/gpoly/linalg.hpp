#pragma once

#include <complex>
#include <vector>

namespace gpoly::linalg {

// Determinant of a dense row-major n x n complex matrix via LU with partial
// pivoting. The input is overwritten with the factorization workspace.
std::complex<double> det_destructive(std::vector<std::complex<double>>& m, int n);

}  // namespace gpoly::linalg
