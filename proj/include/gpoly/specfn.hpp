#pragma once

#include <complex>

#include "gpoly/rng.hpp"

namespace gpoly::specfn {

// Principal analytic continuation of ln Gamma (real on the positive axis,
// branch cut along the negative real axis).  Accurate to >= 12 significant
// digits for Re z in [-50, 200], |Im z| <= 1e4, away from the poles.
std::complex<double> log_gamma(std::complex<double> z);

// Real ln Gamma for x > 0.
double log_gamma(double x);

// psi_k for k in {0, 1, 2} and real x > 0: digamma, trigamma, tetragamma.
double polygamma(int k, double x);

inline double digamma(double x) { return polygamma(0, x); }
inline double trigamma(double x) { return polygamma(1, x); }
inline double tetragamma(double x) { return polygamma(2, x); }

// Draw from Gamma(shape, 1) via the Marsaglia-Tsang squeeze method
// (shape >= 1) with the power-of-uniform boost for shape < 1.
double gamma_sample(double shape, RngStream& rng);

}  // namespace gpoly::specfn
