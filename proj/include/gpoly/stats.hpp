#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gpoly::stats {

// A sorted sample together with the seed/tag that generated it.
struct Sample {
  std::vector<double> x;  // ascending
  std::uint64_t seed = 0;
  std::uint64_t tag = 0;
};

Sample make_sample(std::vector<double> values, std::uint64_t seed, std::uint64_t tag = 0);

// sup_x |F_emp(x) - F(x)| against a continuous CDF.
double ks_one_sample(const Sample& s, const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(const Sample& s1, const Sample& s2);

// Quantile of the asymptotic Kolmogorov distribution:
// the lambda with P(sup |B| <= lambda) = p.
double kolmogorov_quantile(double p);

// Critical value for the two-sample statistic at level alpha.
double ks_two_sample_critical(std::size_t n1, std::size_t n2, double alpha);

// Deterministic pairwise (tree) summation; independent of thread layout by
// construction since it consumes a fully materialized vector.
double pairwise_sum(const std::vector<double>& v);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

// Monte-Carlo estimate of E exp(-s Z) for the general-parameter polymer,
// one entry per requested s, sharing instance draws across the grid.
// Replica r draws from the stream derived from (base_seed, r, tag).
std::vector<MeanSe> mc_laplace(int n, int h, const std::vector<double>& a,
                               const std::vector<double>& b,
                               const std::vector<double>& s_grid, int replicas,
                               std::uint64_t base_seed, int threads = 1,
                               std::uint64_t tag = 0);

}  // namespace gpoly::stats
