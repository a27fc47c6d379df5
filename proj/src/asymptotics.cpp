#include "gpoly/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "gpoly/errors.hpp"
#include "gpoly/specfn.hpp"

namespace gpoly::asymptotics {

double h_derivative(int order, double z, double c, double gamma, double mu) {
  if (!(z > 0.0)) {
    throw std::domain_error("h_derivative: z must be positive");
  }
  switch (order) {
    case 0:
      return specfn::log_gamma(z) - c * specfn::log_gamma(z + gamma) + mu * z;
    case 1:
      return specfn::polygamma(0, z) - c * specfn::polygamma(0, z + gamma) + mu;
    case 2:
      return specfn::polygamma(1, z) - c * specfn::polygamma(1, z + gamma);
    case 3:
      return specfn::polygamma(2, z) - c * specfn::polygamma(2, z + gamma);
    default:
      throw std::invalid_argument("h_derivative: order must be in {0,1,2,3}");
  }
}

Constants critical_constants(double c, double gamma) {
  if (!(c > 1.0)) {
    throw std::invalid_argument("critical_constants: c must exceed 1");
  }
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("critical_constants: gamma must be positive");
  }

  // H'' blows up to +inf at 0+ and behaves like (1-c)/z < 0 for large z.
  // Scan geometrically spaced points for the sign change.
  const auto h2 = [&](double z) { return h_derivative(2, z, c, gamma, 0.0); };
  const double z_min = 1e-10, z_max = 1e3;
  const double ratio = std::pow(10.0, 1.0 / 16.0);
  double lo = z_min, f_lo = h2(lo);
  double hi = 0.0;
  bool found = false;
  for (double z = z_min * ratio; z <= z_max * ratio; z *= ratio) {
    const double f = h2(z);
    if (f_lo > 0.0 && f <= 0.0) {
      hi = z;
      found = true;
      break;
    }
    lo = z;
    f_lo = f;
  }
  if (!found) {
    throw numerical_error(
        "critical_constants: no sign change of H'' on (1e-10, 1e3); "
        "gamma is not small enough for this c");
  }
  for (int it = 0; it < 300 && hi - lo > 1e-14 * std::max(1.0, lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    (h2(mid) > 0.0 ? lo : hi) = mid;
  }

  Constants k;
  k.c = c;
  k.gamma = gamma;
  k.c_n_tilde = c;
  k.z_star = 0.5 * (lo + hi);
  k.mu = c * specfn::polygamma(0, k.z_star + gamma) -
         specfn::polygamma(0, k.z_star);
  k.g_bar = c * specfn::polygamma(2, k.z_star + gamma) -
            specfn::polygamma(2, k.z_star);
  if (!(k.g_bar > 0.0)) {
    throw numerical_error("critical_constants: g_bar not positive");
  }
  return k;
}

Constants critical_constants_n(int n, double c, double gamma) {
  if (n < 1) {
    throw std::invalid_argument("critical_constants_n: n must be positive");
  }
  const double cn = c * static_cast<double>(n);
  const double c_tilde = std::ceil(cn - 1e-9) / static_cast<double>(n);
  Constants k = critical_constants(c_tilde, gamma);
  k.c = c;
  k.c_n_tilde = c_tilde;
  return k;
}

double fpp_consistency(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("fpp_consistency: alpha must be positive");
  }
  const double gamma = 1e-4;
  const Constants k = critical_constants(1.0 + alpha, gamma);
  return -gamma * k.mu;
}

}  // namespace gpoly::asymptotics
