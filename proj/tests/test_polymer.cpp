#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/polymer.hpp"
#include "gpoly/rng.hpp"
#include "gpoly/specfn.hpp"
#include "gpoly/stats.hpp"

using namespace gpoly;
using namespace gpoly::polymer;

TEST_CASE("path_count gives the stars-and-bars binomial") {
  CHECK(path_count(1, 4) == 4);
  CHECK(path_count(2, 2) == 3);
  CHECK(path_count(3, 3) == 10);
  CHECK(path_count(8, 8) == 6435);
  CHECK(path_count(30, 31) == 118264581564861424ULL);  // binomial(60, 30)
  // binomial(70, 35) exceeds 64 bits and saturates
  CHECK(path_count(35, 36) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("partition_log closed cases") {
  Instance unit(2, 2);
  for (double& v : unit.g) v = 1.0;
  CHECK(partition_log(unit) == doctest::Approx(std::log(3.0)).epsilon(1e-14));

  Instance row(1, 4);
  row.g = {0.2, 1.5, 3.0, 0.7};
  CHECK(partition_log(row) == doctest::Approx(std::log(5.4)).epsilon(1e-13));

  Instance hand(2, 2);
  hand.g = {1.0, 2.0, 3.0, 4.0};
  // paths (1,1): 1*3, (1,2): 1*4, (2,2): 2*4
  CHECK(brute_force_partition_log(hand) ==
        doctest::Approx(std::log(15.0)).epsilon(1e-14));
  CHECK(partition_log(hand) == doctest::Approx(std::log(15.0)).epsilon(1e-14));
}

TEST_CASE("unit weights reproduce ln path_count up to 8x8") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      Instance inst(m, n);
      for (double& v : inst.g) v = 1.0;
      CHECK(std::abs(partition_log(inst) -
                     std::log(static_cast<double>(path_count(m, n)))) < 1e-12);
    }
  }
}

TEST_CASE("dynamic program matches enumeration on random instances") {
  RngStream rng(314159);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 1 + static_cast<int>(rng.raw() % 6);
    const int n = 1 + static_cast<int>(rng.raw() % 6);
    const Instance inst = sample_instance(m, n, 0.8, rng);
    const double dp = partition_log(inst);
    const double bf = brute_force_partition_log(inst);
    CHECK(std::abs(dp - bf) <= 1e-12 * std::max(1.0, std::abs(bf)));
  }
}

TEST_CASE("fpp_min matches enumeration and closed cases") {
  Instance unit(5, 3);
  for (double& v : unit.g) v = 1.0;
  CHECK(fpp_min(unit) == doctest::Approx(5.0));

  Instance row(1, 4);
  row.g = {0.2, 1.5, 3.0, 0.7};
  CHECK(fpp_min(row) == doctest::Approx(0.2));

  RngStream rng(2718);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 1 + static_cast<int>(rng.raw() % 6);
    const int n = 1 + static_cast<int>(rng.raw() % 6);
    const Instance inst = sample_exponential(m, n, rng);
    CHECK(fpp_min(inst) == doctest::Approx(brute_force_fpp(inst)).epsilon(1e-14));
  }
}

TEST_CASE("monotonicity in a single weight") {
  RngStream rng(5);
  Instance inst = sample_instance(3, 3, 1.0, rng);
  const double base = partition_log(inst);
  const double fbase = fpp_min(inst);
  inst.at(1, 1) *= 1.5;
  CHECK(partition_log(inst) > base);
  inst.at(1, 1) /= 3.0;
  CHECK(fpp_min(inst) <= fbase + 1e-15);
}

TEST_CASE("shape matrix follows the index map") {
  // The two diagonals share their a-parameter along j+constant rows:
  // entry (i,j) has shape a_{n-j+1} + b_{i+j-1} in 1-based indexing.
  const std::vector<double> s =
      shape_matrix(2, 3, {0.1, 0.2}, {0.5, 0.6, 0.7});
  REQUIRE(s.size() == 4);
  CHECK(s[0] == doctest::Approx(0.7));
  CHECK(s[1] == doctest::Approx(0.7));
  CHECK(s[2] == doctest::Approx(0.8));
  CHECK(s[3] == doctest::Approx(0.8));

  // constant choices reduce to the homogeneous model
  const std::vector<double> eq = shape_matrix(3, 4, {0.1, 0.1, 0.1},
                                              {0.4, 0.4, 0.4, 0.4});
  for (double v : eq) CHECK(v == doctest::Approx(0.5));

  CHECK_THROWS_AS((void)shape_matrix(3, 2, {0.1, 0.1, 0.1}, {0.4, 0.4}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)shape_matrix(1, 1, {-0.5}, {0.2}),
                  std::invalid_argument);
}

TEST_CASE("general sampler matches its marginal law") {
  // n=1, h=1, a=0.3, b=0.7: the single entry is Gamma(1.0) = Exp(1).
  RngStream rng(99);
  const int reps = 50000;
  std::vector<double> draws(reps);
  for (int i = 0; i < reps; ++i) {
    draws[i] = sample_instance_general(1, 1, {0.3}, {0.7}, rng).g[0];
  }
  const auto sample = stats::make_sample(std::move(draws), 99);
  const double d = stats::ks_one_sample(
      sample, [](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); });
  CHECK(d < 1.95 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("enumeration respects its budget") {
  Instance big(40, 40);
  for (double& v : big.g) v = 1.0;
  CHECK_THROWS_AS((void)brute_force_partition_log(big), budget_error);
}

TEST_CASE("log-domain entry point agrees with the linear one") {
  RngStream rng(808);
  const Instance inst = sample_instance(4, 5, 1.3, rng);
  std::vector<double> logs(inst.g.size());
  for (std::size_t k = 0; k < logs.size(); ++k) logs[k] = std::log(inst.g[k]);
  CHECK(partition_log_from_logs(4, 5, logs) ==
        doctest::Approx(partition_log(inst)).epsilon(1e-14));
}

TEST_CASE("small-shape free energy approaches the min-plus law") {
  // At shape gamma -> 0, -gamma ln Z has the law of the minimal passage cost
  // with Exp(1) costs. Compare the two at gamma = 1e-3, m = n = 5.
  const double gamma = 1e-3;
  const int m = 5, n = 5, reps = 10000;
  RngStream rng(4242);
  std::vector<double> lhs(reps), rhs(reps);
  for (int rep = 0; rep < reps; ++rep) {
    std::vector<double> log_g(static_cast<std::size_t>(m) * n);
    for (double& v : log_g) {
      // ln of a Gamma(gamma) draw, kept in log scale throughout
      v = std::log(specfn::gamma_sample(gamma + 1.0, rng)) +
          std::log(rng.uniform()) / gamma;
    }
    lhs[rep] = -gamma * partition_log_from_logs(m, n, log_g);
  }
  for (int rep = 0; rep < reps; ++rep) {
    Instance costs = sample_exponential(m, n, rng);
    rhs[rep] = fpp_min(costs);
  }
  const double d = stats::ks_two_sample(stats::make_sample(std::move(lhs), 4242),
                                        stats::make_sample(std::move(rhs), 4242));
  CHECK(d < 0.05);
}
