#pragma once

namespace gpoly::asymptotics {

// Saddle-point data for the variational function
//   H(z) = ln Gamma(z) - c ln Gamma(z + gamma) + mu z
// on (0, inf). z_star is the unique root of H'', mu is chosen so that
// H'(z_star) = 0, and g_bar = -H'''(z_star) > 0 sets the fluctuation scale.
struct Constants {
  double c = 0.0;          // aspect ratio, > 1
  double gamma = 0.0;      // weight shape parameter
  double c_n_tilde = 0.0;  // ceil(c*n)/n when tied to a finite n, else c
  double z_star = 0.0;
  double mu = 0.0;
  double g_bar = 0.0;
};

// Derivatives of H. order 0 is H itself, orders 1..3 use polygamma.
double h_derivative(int order, double z, double c, double gamma, double mu);

// Root-find z_star on (1e-10, 1e3) by geometric sign-change scan plus
// bisection, then fill in mu and g_bar. Throws numerical_error when the
// sign change is absent (gamma too large for the given c).
Constants critical_constants(double c, double gamma);

// Same data computed at the rational ratio ceil(c*n)/n that the finite-n
// kernels use; the requested c is kept for reference.
Constants critical_constants_n(int n, double c, double gamma);

// Small-gamma consistency with the minimal-passage limit: returns
// -gamma*mu at gamma = 1e-4, c = 1 + alpha, which should approximate
// (sqrt(1+alpha) - 1)^2.
double fpp_consistency(double alpha);

}  // namespace gpoly::asymptotics
