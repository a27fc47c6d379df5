#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "gpoly/rng.hpp"

using gpoly::RngStream;

TEST_CASE("splitmix64 reproduces the reference sequence") {
  // First outputs for state 0, from the published reference implementation.
  std::uint64_t s = 0;
  CHECK(gpoly::splitmix64(s) == 0xe220a8397b1dcdafULL);
  CHECK(gpoly::splitmix64(s) == 0x6e789e6aa1b965f4ULL);
  CHECK(gpoly::splitmix64(s) == 0x06c45d188009454fULL);
}

TEST_CASE("identical seeds give identical streams") {
  RngStream a(123456789), b(123456789);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.raw() == b.raw());
  }
  RngStream c = RngStream::for_replica(7, 3, 1);
  RngStream d = RngStream::for_replica(7, 3, 1);
  for (int i = 0; i < 100; ++i) {
    CHECK(c.uniform() == d.uniform());
  }
}

TEST_CASE("replica and tag changes decorrelate the streams") {
  std::set<std::uint64_t> first_words;
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    for (std::uint64_t tag = 0; tag < 4; ++tag) {
      first_words.insert(RngStream::for_replica(99, rep, tag).raw());
    }
  }
  CHECK(first_words.size() == 200);  // no collisions among 200 streams
}

TEST_CASE("uniform lands strictly inside (0,1) with the right moments") {
  RngStream rng(2024);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sq += u * u;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(var - 1.0 / 12.0) < 5e-4);
}

TEST_CASE("normal has unit variance and vanishing skew") {
  RngStream rng(77);
  const int n = 200000;
  double m1 = 0.0, m2 = 0.0, m3 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    m1 += x;
    m2 += x * x;
    m3 += x * x * x;
  }
  m1 /= n;
  m2 /= n;
  m3 /= n;
  CHECK(std::abs(m1) < 5.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(m2 - 1.0) < 5.0 * std::sqrt(2.0 / n));
  CHECK(std::abs(m3) < 5.0 * std::sqrt(15.0 / n));
}
