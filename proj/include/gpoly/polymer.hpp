#pragma once

#include <cstdint>
#include <vector>

#include "gpoly/rng.hpp"

namespace gpoly::polymer {

// An m x n array of positive path weights g_{ij} (row-major, 0-based).
// Admissible paths pick one column index per row, non-decreasing down the
// rows; a path's weight is the product (resp. sum, for the min-plus model)
// of the entries it visits.
struct Instance {
  int m = 0;
  int n = 0;
  std::vector<double> g;

  Instance() = default;
  Instance(int m_, int n_) : m(m_), n(n_), g(static_cast<std::size_t>(m_) * n_, 0.0) {}

  double& at(int i, int j) { return g[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return g[static_cast<std::size_t>(i) * n + j]; }
};

// i.i.d. Gamma(shape, 1) entries.
Instance sample_instance(int m, int n, double shape, RngStream& rng);

// Entry (i,j) ~ Gamma(a_{n-j+1} + b_{i+j-1}) in 1-based indices; requires
// h = m + n - 1 parameters in b, n parameters in a, all pairwise sums positive.
Instance sample_instance_general(int n, int h, const std::vector<double>& a,
                                 const std::vector<double>& b, RngStream& rng);

// The shape parameters used by sample_instance_general, for inspection.
std::vector<double> shape_matrix(int n, int h, const std::vector<double>& a,
                                 const std::vector<double>& b);

// i.i.d. Exp(1) entries (unit-rate exponential passage costs).
Instance sample_exponential(int m, int n, RngStream& rng);

// ln of the partition function: log-sum-exp dynamic programming with a
// streaming prefix accumulator, O(mn) time.
double partition_log(const Instance& inst);

// Same recursion fed with ln g_{ij} directly (row-major m x n), for shape
// regimes where the weights underflow in linear scale.
double partition_log_from_logs(int m, int n, const std::vector<double>& log_g);

// Min-plus analogue: smallest total cost over admissible paths.
double fpp_min(const Instance& inst);

// Number of admissible paths, binomial(n+m-1, m).
std::uint64_t path_count(int m, int n);

// Exhaustive-enumeration references; throw budget_error beyond 1e6 paths.
double brute_force_partition_log(const Instance& inst);
double brute_force_fpp(const Instance& inst);

}  // namespace gpoly::polymer
