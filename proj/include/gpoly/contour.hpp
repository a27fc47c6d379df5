#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gpoly/asymptotics.hpp"

namespace gpoly::contour {

using cd = std::complex<double>;

// One smooth arc, parametrized over t in [0,1], with its exact derivative.
struct Piece {
  std::function<cd(double)> z;
  std::function<cd(double)> dz;
};

struct Contour {
  std::vector<Piece> pieces;
  bool closed = false;
};

struct QuadratureRule {
  std::vector<cd> nodes;
  std::vector<cd> weights;  // Gauss weight times dz/dt, so plain dz measure
};

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w);

// Per-piece Gauss-Legendre discretization of a contour.
QuadratureRule quadrature(const Contour& c, int order);

// Positively oriented circle, two semicircle pieces.
Contour circle(cd center, double radius);

// Vertical line x0 + i[-T, T] oriented upward, with panels graded toward the
// real axis so oscillatory gamma factors resolve near Im z = 0.
Contour vline(double x0, double T);

// Open polyline through the given points; each edge may be split into several
// equal pieces.
Contour polyline(const std::vector<cd>& points, int split = 1);

// Closed steepest-descent v-contour around the critical point. For c <= 5/2
// it is the quadrilateral z* -> z* + L e^{2pi i/3} -> -L -> conjugate -> z*
// with L = 2 gamma/(c-1); for c > 5/2 the two legs have length
// 6 gamma/(5(sqrt(c)-1)) and close through a circular arc centered at z*.
// Legs adjacent to z* are split into ceil(n^{1/3}/2) pieces so the quadrature
// resolves the n-dependent peak. Parameter combinations whose left extent
// reaches the integrand pole at -1 (side length or sweep past -0.9) throw
// std::domain_error; the shape cannot be altered without changing which
// coupling poles the contour encloses.
Contour steepest_v(const asymptotics::Constants& k, int n);

// Upward steepest-descent w-contour: legs of length 2 gamma/(c-1) at angles
// +-pi/3 from the junction z* + gamma n^{-1/3}, continued by vertical rays
// truncated where the integrand is negligible.
Contour steepest_w(const asymptotics::Constants& k, int n);

// Rescaled wedges for the limit kernel, oriented upward. The v-wedge opens
// left at angles +-2pi/3 through the origin; the w-wedge opens right at
// angles +-pi/3 through a positive real offset. For x below -1 the vertex is
// replaced by a vertical segment passing near +-i sqrt(-x), where the cubic
// exponent's saddles sit, so the lower tail stays numerically clean.
Contour wedge_v(double x, double truncation);
Contour wedge_w(double x, double truncation, double offset = 0.5);

}  // namespace gpoly::contour
