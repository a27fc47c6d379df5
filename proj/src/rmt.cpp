#include "gpoly/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpoly/errors.hpp"

namespace gpoly::rmt {

Hermitian::Hermitian(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("Hermitian: size must be in [1, 64]");
  }
}

Hermitian::Hermitian(int n, std::vector<cd> entries) : n_(n), a_(std::move(entries)) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("Hermitian: size must be in [1, 64]");
  }
  if (a_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("Hermitian: entry count mismatch");
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(at(i, i).imag()) > 1e-12 * (1.0 + std::abs(at(i, i)))) {
      throw std::invalid_argument("Hermitian: diagonal must be real");
    }
    at(i, i) = cd(at(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) >
          1e-12 * (1.0 + std::abs(at(i, j)))) {
        throw std::invalid_argument("Hermitian: conjugate symmetry violated");
      }
      at(j, i) = std::conj(at(i, j));
    }
  }
}

std::vector<double> eigenvalues(const Hermitian& A) {
  const int n = A.size();
  std::vector<cd> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i) * n + j] = A.at(i, j);
    }
  }
  auto at = [&](int i, int j) -> cd& {
    return m[static_cast<std::size_t>(i) * n + j];
  };

  double norm = 0.0;
  for (const cd& v : m) norm += std::norm(v);
  norm = std::sqrt(norm);
  const double tol = 1e-14 * std::max(norm, 1.0);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        off += std::norm(at(p, q));
      }
    }
    if (std::sqrt(2.0 * off) < tol) break;
    if (sweep == 59) {
      throw numerical_error("eigenvalues: Jacobi sweeps did not converge");
    }

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cd alpha = at(p, q);
        const double aa = std::abs(alpha);
        if (aa < 1e-300) continue;
        const double tau = (at(q, q).real() - at(p, p).real()) / (2.0 * aa);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sigma = t * c;
        const cd phase = alpha / aa;
        const cd s = sigma * phase;

        const double app = at(p, p).real(), aqq = at(q, q).real();
        at(p, p) = cd(c * c * app + sigma * sigma * aqq - 2.0 * c * sigma * aa, 0.0);
        at(q, q) = cd(c * c * aqq + sigma * sigma * app + 2.0 * c * sigma * aa, 0.0);
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cd akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - std::conj(s) * akq;
          at(k, q) = s * akp + c * akq;
          at(p, k) = std::conj(at(k, p));
          at(q, k) = std::conj(at(k, q));
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

Hermitian wishart(int n, int h, RngStream& rng) {
  if (n < 1 || h < 1) {
    throw std::invalid_argument("wishart: dimensions must be positive");
  }
  const double root_half = std::sqrt(0.5);
  std::vector<cd> x(static_cast<std::size_t>(n) * h);
  for (cd& v : x) {
    const double re = rng.normal() * root_half;
    const double im = rng.normal() * root_half;
    v = cd(re, im);
  }
  Hermitian A(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cd sum = 0.0;
      for (int k = 0; k < h; ++k) {
        sum += x[static_cast<std::size_t>(i) * h + k] *
               std::conj(x[static_cast<std::size_t>(j) * h + k]);
      }
      A.at(i, j) = sum;
      A.at(j, i) = std::conj(sum);
    }
  }
  for (int i = 0; i < n; ++i) A.at(i, i) = cd(A.at(i, i).real(), 0.0);
  return A;
}

double wishart_min_eig(int n, int h, RngStream& rng) {
  const std::vector<double> ev = eigenvalues(wishart(n, h, rng));
  if (h >= n && !(ev.front() > 0.0)) {
    throw numerical_error("wishart_min_eig: non-positive eigenvalue");
  }
  return ev.front();
}

}  // namespace gpoly::rmt
