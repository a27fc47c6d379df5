#include "gpoly/specfn.hpp"

#include <cmath>
#include <stdexcept>

#include "gpoly/errors.hpp"

namespace gpoly::specfn {

namespace {

// B_{2m} / (2m (2m-1)) for the Stirling series of ln Gamma.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    7.0 / 1092.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// B_{2m} for the polygamma asymptotic series (eight terms, fixed).
constexpr double kBernoulli[] = {
    1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2 pi)/2

// Stirling series, valid for Re w >= 12.
std::complex<double> stirling_log_gamma(std::complex<double> w) {
  const std::complex<double> lw = std::log(w);
  std::complex<double> r = (w - 0.5) * lw - w + kHalfLog2Pi;
  const std::complex<double> w2 = w * w;
  std::complex<double> p = 1.0 / w;
  for (double c : kStirling) {
    r += c * p;
    p /= w2;
  }
  return r;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 &&
      std::abs(z.real() - std::round(z.real())) < 1e-12) {
    throw std::domain_error("log_gamma: pole at non-positive integer");
  }
  constexpr double kShiftTo = 12.0;
  std::complex<double> acc = 0.0;
  int shifts = 0;
  while (z.real() < kShiftTo) {
    acc += std::log(z);
    z += 1.0;
    if (++shifts > 300) {
      throw numerical_error("log_gamma: recurrence did not terminate");
    }
  }
  return stirling_log_gamma(z) - acc;
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma(real): requires x > 0");
  }
  return std::lgamma(x);
}

double polygamma(int k, double x) {
  if (k < 0 || k > 2) {
    throw std::domain_error("polygamma: order must be 0, 1, or 2");
  }
  if (!(x > 0.0)) {
    throw std::domain_error("polygamma: requires x > 0");
  }
  // Shift to x >= 10, accumulating the recurrence terms d^k/dx^k (-1/x).
  double acc = 0.0;
  while (x < 10.0) {
    switch (k) {
      case 0: acc -= 1.0 / x; break;
      case 1: acc += 1.0 / (x * x); break;
      case 2: acc -= 2.0 / (x * x * x); break;
    }
    x += 1.0;
  }
  const double x2 = x * x;
  double r;
  switch (k) {
    case 0: {
      r = std::log(x) - 0.5 / x;
      double p = 1.0 / x2;
      for (int m = 0; m < 8; ++m) {
        r -= kBernoulli[m] / (2.0 * (m + 1)) * p;
        p /= x2;
      }
      break;
    }
    case 1: {
      r = 1.0 / x + 0.5 / x2;
      double p = 1.0 / (x2 * x);
      for (int m = 0; m < 8; ++m) {
        r += kBernoulli[m] * p;
        p /= x2;
      }
      break;
    }
    default: {
      r = -1.0 / x2 - 1.0 / (x2 * x);
      double p = 1.0 / (x2 * x2);
      for (int m = 0; m < 8; ++m) {
        r -= kBernoulli[m] * (2.0 * (m + 1) + 1.0) * p;
        p /= x2;
      }
      break;
    }
  }
  return r + acc;
}

double gamma_sample(double shape, RngStream& rng) {
  if (!(shape > 0.0)) {
    throw std::domain_error("gamma_sample: shape must be positive");
  }
  if (shape < 1.0) {
    const double y = gamma_sample(shape + 1.0, rng);
    return y * std::pow(rng.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) {
      return d * v;
    }
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

}  // namespace gpoly::specfn
