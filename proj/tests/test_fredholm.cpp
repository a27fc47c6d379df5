#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "gpoly/asymptotics.hpp"
#include "gpoly/contour.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/fredholm.hpp"

using namespace gpoly;
using namespace gpoly::fredholm;

namespace {

Params a5_params() {
  Params p;
  p.n = 1;
  p.h = 1;
  p.a = {0.0};
  p.b = {1.0};
  p.s = 1.0;
  p.delta1 = 0.25;
  p.delta2 = 0.5;
  return p;
}

Params inhomogeneous_params(double s) {
  Params p;
  p.n = 1;
  p.h = 2;
  p.a = {0.25};
  p.b = {0.6, 0.8};
  p.s = s;
  p.delta1 = 0.3;
  p.delta2 = 0.45;
  return p;
}

Params two_by_three_params(double s) {
  Params p;
  p.n = 2;
  p.h = 3;
  p.a = {0.01, 0.02};
  p.b = {0.49, 0.48, 0.47};
  p.s = s;
  p.delta1 = 0.1;
  p.delta2 = 0.3;
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  Params p = a5_params();
  validate(p);  // the reference set is admissible

  Params bad = p;
  bad.a = {};
  CHECK_THROWS_AS(validate(bad), validation_error);
  bad = p;
  bad.s = 0.0;
  CHECK_THROWS_AS(validate(bad), validation_error);
  bad = p;
  bad.delta1 = 0.0;
  CHECK_THROWS_AS(validate(bad), validation_error);
  bad = p;
  bad.delta1 = 0.6;  // violates delta1 < min(delta2, 1 - delta2)
  CHECK_THROWS_AS(validate(bad), validation_error);
  bad = p;
  bad.a = {0.3};  // |a| >= delta1
  CHECK_THROWS_AS(validate(bad), validation_error);
  bad = p;
  bad.b = {0.4};  // b <= delta2
  CHECK_THROWS_AS(validate(bad), validation_error);
  CHECK_THROWS_AS((void)det_finite_lt(p, 2), std::invalid_argument);
}

TEST_CASE("truncation search reaches a sane height") {
  const double t = auto_truncation(two_by_three_params(1.0));
  CHECK(t >= 50.0);
  CHECK(t < 1e4);
}

TEST_CASE("discretized determinant of trivial kernels") {
  const auto rule = contour::quadrature(contour::circle({0.0, 0.0}, 1.0), 24);
  CHECK(nystrom_det(rule, [](cd, cd) { return cd(0.0); }) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // rank-one kernel 1/x adds exactly the winding number
  CHECK(nystrom_det(rule, [](cd x, cd) { return 1.0 / x; }) ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("imaginary residue is rejected") {
  // K(x, y) = x on the open segment [0, i] leaves det = 1 + i/(4 pi)
  const auto rule =
      contour::quadrature(contour::polyline({cd(0.0), cd(0.0, 1.0)}), 16);
  CHECK_THROWS_AS(
      (void)nystrom_det(rule, [](cd x, cd) { return x; }), numerical_error);
}

TEST_CASE("node collision with a sine pole is detected") {
  contour::QuadratureRule rule;
  rule.nodes.push_back(cd(0.25, 0.0));
  rule.weights.push_back(cd(1.0, 0.0));
  CHECK_THROWS_AS(
      (void)kernel_finite_lt(cd(0.25, 0.0), cd(0.1, 0.0), a5_params(), rule),
      numerical_error);
}

TEST_CASE("homogeneous single-cell transform is one half") {
  CHECK(det_finite_lt(a5_params()) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(det_matrix_formula(a5_params()) == doctest::Approx(0.5).epsilon(1e-8));
  // the direct spectral route needs a > 0; the homogeneous a = 0 point sits
  // exactly on its contour pole
  CHECK_THROWS_AS((void)sklyanin_lt(a5_params()), validation_error);
}

TEST_CASE("shifted single-cell transform is one half") {
  // a + b = 1 at s = 1 forces the value 1/2 on every route
  Params p;
  p.n = 1;
  p.h = 1;
  p.a = {0.3};
  p.b = {0.7};
  p.s = 1.0;
  p.delta1 = 0.35;
  p.delta2 = 0.5;
  CHECK(det_finite_lt(p) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(det_matrix_formula(p) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(sklyanin_lt(p) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("inhomogeneous one-column reference value") {
  const Params p = inhomogeneous_params(0.7);
  const double reference = 0.6904305647371748;
  CHECK(det_finite_lt(p) == doctest::Approx(reference).epsilon(1e-8));
  CHECK(det_matrix_formula(p) == doctest::Approx(reference).epsilon(1e-8));
  CHECK(sklyanin_lt(p) == doctest::Approx(reference).epsilon(1e-6));
}

TEST_CASE("kernel entries on real symmetric data are real") {
  const Params p = a5_params();
  const auto wr = contour::quadrature(
      contour::vline(p.delta2, auto_truncation(p)), 48);
  const cd k = kernel_finite_lt(cd(0.25, 0.0), cd(0.25, 0.0), p, wr);
  CHECK(std::abs(k.imag()) < 1e-10 * (1.0 + std::abs(k.real())));
}

TEST_CASE("two-column reference values and route agreement") {
  const std::vector<double> s_grid{0.5, 1.0, 2.0};
  const std::vector<double> frozen{0.7804866445, 0.6703960795, 0.5450768800};
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const Params p = two_by_three_params(s_grid[i]);
    const double via_nystrom = det_finite_lt(p);
    const double via_matrix = det_matrix_formula(p);
    const double via_direct = sklyanin_lt(p);
    CHECK(via_nystrom == doctest::Approx(frozen[i]).epsilon(1e-8));
    CHECK(std::abs(via_nystrom - via_matrix) < 1e-8);
    CHECK(std::abs(via_nystrom - via_direct) < 1e-6);
  }
}

TEST_CASE("three-column route agreement") {
  Params p;
  p.n = 3;
  p.h = 3;
  p.a = {0.01, -0.02, 0.03};
  p.b = {0.5, 0.52, 0.54};
  p.s = 1.3;
  p.delta1 = 0.06;
  p.delta2 = 0.4;
  CHECK(std::abs(det_finite_lt(p) - det_matrix_formula(p)) < 1e-8);
}

TEST_CASE("determinant is stable under contour deformations") {
  Params p = inhomogeneous_params(0.7);
  const double base = det_finite_lt(p);
  p.delta1 = 0.28;
  p.delta2 = 0.52;
  CHECK(det_finite_lt(p) == doctest::Approx(base).epsilon(1e-8));
  p.delta1 = 0.35;
  p.delta2 = 0.45;
  CHECK(det_finite_lt(p) == doctest::Approx(base).epsilon(1e-8));
}

TEST_CASE("determinant is stable under order doubling") {
  const Params p = two_by_three_params(1.0);
  CHECK(std::abs(det_finite_lt(p, 24) - det_finite_lt(p, 48)) < 1e-7);
  CHECK(std::abs(det_matrix_formula(p, 24) - det_matrix_formula(p, 48)) <
        1e-7);
}

TEST_CASE("coincident a-parameters require the extrapolated route") {
  Params p = two_by_three_params(1.0);
  p.a = {0.01, 0.01};
  CHECK_THROWS_AS((void)det_matrix_formula(p), validation_error);

  p.a = {0.0, 0.0};
  const double direct = det_finite_lt(p);
  const double extrapolated = det_matrix_formula_extrapolated(p);
  CHECK(std::abs(extrapolated - direct) < 1e-5);
}

TEST_CASE("direct integral guards its domain") {
  Params p = two_by_three_params(1.0);
  p.n = 3;
  p.a = {0.01, 0.02, 0.03};
  CHECK_THROWS_AS((void)sklyanin_lt(p), validation_error);
  // a truncation too low for the decay estimate is rejected
  CHECK_THROWS_AS((void)sklyanin_lt(two_by_three_params(1.0), 0.5),
                  numerical_error);
}

TEST_CASE("pre-limit determinants approach the limit value") {
  const double f_inf = det_limit(2.0, 0.0);
  CHECK(f_inf == doctest::Approx(0.9693728283552607).epsilon(1e-10));

  const asymptotics::Constants k10 = asymptotics::critical_constants_n(10, 2.0, 0.3);
  const asymptotics::Constants k50 = asymptotics::critical_constants_n(50, 2.0, 0.3);
  const double f10 = det_prelimit(k10, 10, 0.0);
  const double f50 = det_prelimit(k50, 50, 0.0);
  CHECK(f10 == doctest::Approx(0.952234).epsilon(2e-6));
  CHECK(f50 == doctest::Approx(0.962715).epsilon(2e-6));
  CHECK(std::abs(f50 - f_inf) < std::abs(f10 - f_inf));
}

TEST_CASE("pre-limit determinant is increasing in the argument") {
  const asymptotics::Constants k = asymptotics::critical_constants_n(10, 2.0, 0.3);
  const double lo = det_prelimit(k, 10, -1.0);
  const double mid = det_prelimit(k, 10, 0.0);
  const double hi = det_prelimit(k, 10, 1.0);
  CHECK(lo < mid);
  CHECK(mid < hi);
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
}

TEST_CASE("limit determinant reference values") {
  CHECK(det_limit(2.0, -2.5) ==
        doctest::Approx(0.21235142581959).epsilon(1e-9));
  CHECK(std::abs(det_limit(2.0, 10.0) - 1.0) < 1e-8);
  const double deep = det_limit(2.0, -15.0);
  REQUIRE(deep > 0.0);
  // compare on a log scale; the value sits far below double-epsilon of 1
  CHECK(std::abs(std::log(deep / 5.552e-87)) < 0.01);
}

TEST_CASE("limit determinant is stable in truncation and order") {
  const double base = det_limit(2.0, -0.5);
  CHECK(std::abs(det_limit(2.0, -0.5, 8.0) - base) < 1e-8);
  CHECK(std::abs(det_limit(2.0, -0.5, 12.0, 32) - base) < 1e-8);
}

TEST_CASE("limit determinant is continuous across the contour switch") {
  // the wedge shape changes at effective argument -1
  const double left = det_limit(2.0, -1.0 - 1e-7);
  const double right = det_limit(2.0, -1.0 + 1e-7);
  CHECK(std::abs(left - right) < 1e-6);
}

TEST_CASE("limit determinant obeys the cubic scale covariance") {
  for (double g : {0.5, 8.0}) {
    for (double r : {-1.0, 0.5}) {
      const double x = std::cbrt(2.0 / g) * r;
      CHECK(det_limit(g, r) == doctest::Approx(det_limit(2.0, x)).epsilon(1e-8));
    }
  }
}

TEST_CASE("limit determinant validates arguments") {
  CHECK_THROWS_AS((void)det_limit(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)det_limit(2.0, 0.0, 12.0, 2), std::invalid_argument);
  const asymptotics::Constants k = asymptotics::critical_constants(2.0, 0.3);
  CHECK_THROWS_AS((void)det_prelimit(k, 0, 0.0), std::invalid_argument);
}
