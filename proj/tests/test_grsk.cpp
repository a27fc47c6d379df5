#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/grsk.hpp"
#include "gpoly/polymer.hpp"
#include "gpoly/rng.hpp"
#include "gpoly/specfn.hpp"

using namespace gpoly;
using namespace gpoly::grsk;

namespace {

Matrix random_matrix(int h, int n, RngStream& rng) {
  Matrix W(h, n);
  for (double& v : W.w) v = specfn::gamma_sample(0.7, rng);
  return W;
}

}  // namespace

TEST_CASE("tau_log closed cases") {
  Matrix W(3, 2);
  W.w = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};

  CHECK(tau_log(W, 2, 0) == doctest::Approx(0.0));
  // r=1, k=1: only the straight first column
  CHECK(tau_log(W, 1, 1) == doctest::Approx(std::log(1.0 * 3.0 * 5.0)));
  // r=k=n: the n disjoint paths must be the n full columns
  double all = 0.0;
  for (double v : W.w) all += std::log(v);
  CHECK(tau_log(W, 2, 2) == doctest::Approx(all).epsilon(1e-13));
  // r=1, k=2: all single up/right paths from (1,1) to (3,2)
  // enumerate by the row where the path moves right
  const double direct = std::log(1.0 * 2.0 * 4.0 * 6.0 + 1.0 * 3.0 * 4.0 * 6.0 +
                                 1.0 * 3.0 * 5.0 * 6.0);
  CHECK(tau_log(W, 2, 1) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("tau enumeration respects its budget") {
  Matrix big(30, 30);
  for (double& v : big.w) v = 1.0;
  CHECK_THROWS_AS((void)tau_log(big, 30, 15), budget_error);
}

TEST_CASE("one-by-one image is the entry itself") {
  Matrix W(1, 1);
  W.w = {2.5};
  const Image t = grsk_map(W);
  CHECK(t.at(0, 0) == doctest::Approx(std::log(2.5)));
}

TEST_CASE("complement identity ties the corner entry to the partition sum") {
  RngStream rng(1001);
  for (const auto& [h, n] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 3}}) {
    for (int rep = 0; rep < 8; ++rep) {
      const Matrix W = random_matrix(h, n, rng);
      const Image t = grsk_map(W);
      const int m = h - n + 1;
      const double corner = t.at(m - 1, 0);
      const double z = polymer::partition_log(complement_instance(W));
      CHECK(std::abs(z + corner) < 1e-10 * std::max(1.0, std::abs(corner)));
    }
  }
}

TEST_CASE("image commutes with transposition") {
  RngStream rng(77);
  for (const auto& [h, n] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {4, 3}, {3, 3}}) {
    const Matrix W = random_matrix(h, n, rng);
    const Image t = grsk_map(W);
    const Image tt = grsk_map(transpose(W));
    REQUIRE(tt.h == n);
    REQUIRE(tt.n == h);
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(t.at(i, j) - tt.at(j, i)) <
              1e-10 * std::max(1.0, std::abs(t.at(i, j))));
      }
    }
  }
}

TEST_CASE("mass identity: full-tuple tau carries every entry") {
  RngStream rng(31337);
  for (const auto& [h, n] :
       std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {5, 3}, {6, 3}}) {
    const Matrix W = random_matrix(h, n, rng);
    double all = 0.0;
    for (double v : W.w) all += std::log(v);
    CHECK(std::abs(tau_log(W, n, n) - all) <
          1e-10 * std::max(1.0, std::abs(all)));
  }
}

TEST_CASE("ratio ladder reproduces a hand-checked two-by-two image") {
  // For h = n = 2 the ladder gives t_22 = tau_1(2,2), t_11 = tau_2/tau_1 at
  // k = 2 shifted cells; check internal consistency through the complement
  // and transpose routes instead of trusting one path through the code.
  Matrix W(2, 2);
  W.w = {1.3, 0.7, 2.1, 0.4};
  const Image t = grsk_map(W);
  // tau_1(2, 2) = sum over paths (1,1) -> (2,2) = 1.3*2.1*0.4 + 1.3*0.7*0.4
  CHECK(t.at(1, 1) ==
        doctest::Approx(std::log(1.3 * 2.1 * 0.4 + 1.3 * 0.7 * 0.4))
            .epsilon(1e-12));
  // tau_2(2, 2) = product of all entries, so t_11 = tau_2 / tau_1
  const double tau2 = std::log(1.3 * 0.7 * 2.1 * 0.4);
  CHECK(t.at(0, 0) == doctest::Approx(tau2 - t.at(1, 1)).epsilon(1e-12));
}
