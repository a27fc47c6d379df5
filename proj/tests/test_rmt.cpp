#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "gpoly/rmt.hpp"
#include "gpoly/rng.hpp"
#include "gpoly/stats.hpp"

using namespace gpoly;
using namespace gpoly::rmt;

namespace {

Hermitian random_hermitian(int n, RngStream& rng) {
  Hermitian A(n);
  for (int i = 0; i < n; ++i) {
    A.at(i, i) = cd(rng.normal(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      A.at(i, j) = cd(rng.normal(), rng.normal());
      A.at(j, i) = std::conj(A.at(i, j));
    }
  }
  return A;
}

}  // namespace

TEST_CASE("construction validates shape and symmetry") {
  CHECK_THROWS_AS(Hermitian(0), std::invalid_argument);
  CHECK_THROWS_AS(Hermitian(65), std::invalid_argument);
  CHECK_THROWS_AS(Hermitian(2, std::vector<cd>(3)), std::invalid_argument);
  // imaginary diagonal
  CHECK_THROWS_AS(Hermitian(1, {cd(1.0, 0.5)}), std::invalid_argument);
  // broken conjugate symmetry
  CHECK_THROWS_AS(
      Hermitian(2, {cd(1.0), cd(0.0, 1.0), cd(0.0, 1.0), cd(2.0)}),
      std::invalid_argument);
  // a valid matrix passes and mirrors the upper triangle
  Hermitian ok(2, {cd(1.0), cd(0.0, 1.0), cd(0.0, -1.0), cd(2.0)});
  CHECK(ok.at(1, 0) == std::conj(ok.at(0, 1)));
}

TEST_CASE("closed-form spectra") {
  Hermitian one(1, {cd(-3.25)});
  CHECK(eigenvalues(one)[0] == doctest::Approx(-3.25));

  // [[2, 1-i], [1+i, 0]] has eigenvalues 1 +- sqrt(3)
  Hermitian two(2, {cd(2.0), cd(1.0, -1.0), cd(1.0, 1.0), cd(0.0)});
  const auto ev = eigenvalues(two);
  CHECK(ev[0] == doctest::Approx(1.0 - std::sqrt(3.0)).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-12));

  Hermitian diag(3);
  diag.at(0, 0) = 4.0;
  diag.at(1, 1) = -1.0;
  diag.at(2, 2) = 0.5;
  const auto dv = eigenvalues(diag);
  CHECK(dv[0] == doctest::Approx(-1.0));
  CHECK(dv[1] == doctest::Approx(0.5));
  CHECK(dv[2] == doctest::Approx(4.0));
}

TEST_CASE("spectrum matches the first three trace powers") {
  RngStream rng(555);
  for (int n : {2, 4, 6}) {
    const Hermitian A = random_hermitian(n, rng);
    const auto ev = eigenvalues(A);

    double tr1 = 0.0, tr2 = 0.0;
    for (int i = 0; i < n; ++i) {
      tr1 += A.at(i, i).real();
      for (int j = 0; j < n; ++j) tr2 += std::norm(A.at(i, j));
    }
    cd tr3 = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          tr3 += A.at(i, j) * A.at(j, k) * A.at(k, i);
        }
      }
    }

    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (double l : ev) {
      s1 += l;
      s2 += l * l;
      s3 += l * l * l;
    }
    const double scale = std::max(1.0, tr2);
    CHECK(std::abs(s1 - tr1) < 1e-11 * scale);
    CHECK(std::abs(s2 - tr2) < 1e-11 * scale);
    CHECK(std::abs(s3 - tr3.real()) < 1e-10 * scale * std::sqrt(scale));
    CHECK(std::abs(tr3.imag()) < 1e-10 * scale);
  }
}

TEST_CASE("shifting the matrix shifts the spectrum") {
  RngStream rng(808);
  Hermitian A = random_hermitian(5, rng);
  const auto base = eigenvalues(A);
  for (int i = 0; i < 5; ++i) A.at(i, i) += 2.0;
  const auto shifted = eigenvalues(A);
  for (int i = 0; i < 5; ++i) {
    CHECK(shifted[i] == doctest::Approx(base[i] + 2.0).epsilon(1e-11));
  }
}

TEST_CASE("sample covariance draws are positive definite with the right mass") {
  RngStream rng(90210);
  double trace_sum = 0.0;
  const int reps = 2000;
  for (int r = 0; r < reps; ++r) {
    const Hermitian W = wishart(3, 4, rng);
    for (int i = 0; i < 3; ++i) {
      trace_sum += W.at(i, i).real();
      CHECK(W.at(i, i).imag() == 0.0);
    }
    if (r < 50) {
      const auto ev = eigenvalues(W);
      CHECK(ev.front() > 0.0);
    }
  }
  // trace is a sum of 12 unit-mean exponentials, so mean 12, variance 12
  const double mean = trace_sum / reps;
  CHECK(std::abs(mean - 12.0) < 5.0 * std::sqrt(12.0 / reps));
}

TEST_CASE("scalar case reduces to an exponential law") {
  RngStream rng(24601);
  const int reps = 4000;
  std::vector<double> draws(reps);
  for (double& d : draws) d = wishart_min_eig(1, 1, rng);
  const auto sample = stats::make_sample(draws, 24601);
  const double d = stats::ks_one_sample(
      sample, [](double x) { return x > 0.0 ? 1.0 - std::exp(-x) : 0.0; });
  CHECK(d < 1.95 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("single-row case follows the integer-shape gamma law") {
  RngStream rng(1864);
  const int reps = 4000;
  std::vector<double> draws(reps);
  for (double& d : draws) d = wishart_min_eig(1, 3, rng);
  const auto sample = stats::make_sample(draws, 1864);
  const double d = stats::ks_one_sample(sample, [](double x) {
    if (x <= 0.0) return 0.0;
    return 1.0 - std::exp(-x) * (1.0 + x + 0.5 * x * x);
  });
  CHECK(d < 1.95 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("invalid sample covariance shapes throw") {
  RngStream rng(9);
  CHECK_THROWS_AS((void)wishart(0, 3, rng), std::invalid_argument);
  CHECK_THROWS_AS((void)wishart(3, 0, rng), std::invalid_argument);
}
