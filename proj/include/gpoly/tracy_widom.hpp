#pragma once

namespace gpoly::tw {

// GUE Tracy-Widom distribution function evaluated directly through the
// limit-kernel contour determinant (cubic scale fixed to 2).
double tracy_widom_point(double x, double truncation = 12.0, int order = 48);

// Spline-cached evaluation over [-15, 10]; the grid is built once on first
// use (threaded) and interpolated with a monotone cubic. Out-of-range
// arguments throw std::out_of_range.
double tracy_widom_cdf(double x);

// Clamped variant for empirical-CDF comparisons: 0 below -15, 1 above 10.
double tracy_widom_cdf_clamped(double x);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

// Mean and variance by Simpson integration of high-accuracy determinant
// evaluations (truncation 20, order 96) on [-12, 8] with step 0.1.
Moments tracy_widom_moments(int threads = 1);

}  // namespace gpoly::tw
