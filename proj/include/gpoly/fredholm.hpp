#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gpoly/asymptotics.hpp"
#include "gpoly/contour.hpp"

namespace gpoly::fredholm {

using cd = std::complex<double>;

// Parameters of the finite-size Laplace-transform determinant
// E[exp(-s Z)] for the gamma polymer with inhomogeneity shifts a_j, b_i.
struct Params {
  int n = 0;              // number of a-parameters (column direction)
  int h = 0;              // number of b-parameters (row direction)
  std::vector<double> a;  // size n, each |a_j| < delta1
  std::vector<double> b;  // size h, each > delta2
  double s = 1.0;         // Laplace variable, > 0
  double delta1 = 0.0;    // radius of the closed outer contour around 0
  double delta2 = 0.0;    // abscissa of the inner vertical line
};

// Checks the admissibility conditions 0 < delta1 < min(delta2, 1 - delta2),
// |a_j| < delta1, b_i > delta2, s > 0. Throws validation_error.
void validate(const Params& p);

// ln F_s(z) = z ln s + sum_i ln Gamma(b_i + z).
cd log_fs(cd z, const Params& p);

// Truncation height for the inner vertical line: max(50, height at which
// the integrand magnitude has dropped by 1e-14 relative to its peak).
double auto_truncation(const Params& p);

using Kernel = std::function<cd(cd, cd)>;

// Nystrom determinant det(I + K) over the rule, with the measure dz/(2 pi i)
// folded into the node weights here. Returns the real part; an imaginary
// residue above 1e-8 (1 + |det|) raises numerical_error.
double nystrom_det(const contour::QuadratureRule& rule, const Kernel& kernel);

// One entry of the finite-size Laplace-transform kernel: the integral over
// w_rule of
//   1/(w - v2) * pi/sin(pi(v1 - w)) * F_s(w)/F_s(v1)
//     * prod_j Gamma(v1 - a_j)/Gamma(w - a_j),
// divided by 2 pi i.
cd kernel_finite_lt(cd v1, cd v2, const Params& p,
                    const contour::QuadratureRule& w_rule);

// Fredholm determinant of kernel_finite_lt over the circle of radius delta1,
// which equals E[exp(-s Z)] for the matching polymer. Batched evaluation.
double det_finite_lt(const Params& p, int order = 48);

// Equivalent n x n determinant with rank-n factor functions. Requires
// pairwise distinct a_j; throws validation_error otherwise.
double det_matrix_formula(const Params& p, int order = 48);

// Equal-a limit of det_matrix_formula: Richardson extrapolation over the
// perturbations a_j + eps (j+1), eps in {2e-2, 1e-2, 5e-3}.
double det_matrix_formula_extrapolated(const Params& p, int order = 48);

// Direct evaluation of the n-fold spectral integral for n <= 2. The
// integration contour sits on the imaginary axis, so every a_j must be
// strictly positive; throws validation_error otherwise.
double sklyanin_lt(const Params& p, double T = 14.0, int order = 64);

// Pre-limit steepest-descent kernel at size n and fluctuation coordinate r;
// constants carry the saddle data at ratio ceil(c n)/n.
cd kernel_prelimit(cd v1, cd v2, const asymptotics::Constants& k, int n,
                   double r, const contour::QuadratureRule& w_rule);

// Its determinant over the closed steepest-descent contour.
double det_prelimit(const asymptotics::Constants& k, int n, double r,
                    int order = 48);

// Limit kernel on the rescaled wedges, cubic exponent scale g_bar. The
// determinant equals the GUE Tracy-Widom distribution at (2/g_bar)^{1/3} r.
cd kernel_limit(cd v1, cd v2, double g_bar, double r,
                const contour::QuadratureRule& w_rule);

double det_limit(double g_bar, double r, double truncation = 12.0,
                 int order = 48);

}  // namespace gpoly::fredholm
