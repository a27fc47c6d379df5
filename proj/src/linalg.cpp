#include "gpoly/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gpoly::linalg {

std::complex<double> det_destructive(std::vector<std::complex<double>>& m, int n) {
  if (n < 0 || m.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("det_destructive: size mismatch");
  }
  if (n == 0) return {1.0, 0.0};

  std::complex<double> det{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m[static_cast<std::size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double mag = std::abs(m[static_cast<std::size_t>(i) * n + k]);
      if (mag > best) {
        best = mag;
        piv = i;
      }
    }
    if (best == 0.0) return {0.0, 0.0};
    if (piv != k) {
      for (int j = k; j < n; ++j) {
        std::swap(m[static_cast<std::size_t>(piv) * n + j],
                  m[static_cast<std::size_t>(k) * n + j]);
      }
      det = -det;
    }
    const std::complex<double> pivot = m[static_cast<std::size_t>(k) * n + k];
    det *= pivot;
    for (int i = k + 1; i < n; ++i) {
      const std::complex<double> f = m[static_cast<std::size_t>(i) * n + k] / pivot;
      if (f == std::complex<double>(0.0, 0.0)) continue;
      for (int j = k + 1; j < n; ++j) {
        m[static_cast<std::size_t>(i) * n + j] -=
            f * m[static_cast<std::size_t>(k) * n + j];
      }
    }
  }
  return det;
}

}  // namespace gpoly::linalg
