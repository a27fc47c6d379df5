#include "gpoly/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpoly/errors.hpp"
#include "gpoly/parallel.hpp"
#include "gpoly/polymer.hpp"
#include "gpoly/rng.hpp"

namespace gpoly::stats {

Sample make_sample(std::vector<double> values, std::uint64_t seed, std::uint64_t tag) {
  if (values.empty()) {
    throw std::invalid_argument("make_sample: empty sample");
  }
  std::sort(values.begin(), values.end());
  return Sample{std::move(values), seed, tag};
}

double ks_one_sample(const Sample& s, const std::function<double(double)>& cdf) {
  const std::size_t n = s.x.size();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(s.x[i]);
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::invalid_argument("ks_one_sample: cdf value outside [0,1]");
    }
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_two_sample(const Sample& s1, const Sample& s2) {
  const std::size_t n1 = s1.x.size(), n2 = s2.x.size();
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < n1 && j < n2) {
    const double v = std::min(s1.x[i], s2.x[j]);
    while (i < n1 && s1.x[i] <= v) ++i;
    while (j < n2 && s2.x[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n1 -
                             static_cast<double>(j) / n2));
  }
  return d;
}

namespace {

// P(sup |Brownian bridge| <= lambda), alternating series.
double kolmogorov_cdf(double lambda) {
  if (lambda < 0.05) return 0.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return 1.0 - 2.0 * sum;
}

}  // namespace

double kolmogorov_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("kolmogorov_quantile: p must be in (0,1)");
  }
  double lo = 0.05, hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (kolmogorov_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ks_two_sample_critical(std::size_t n1, std::size_t n2, double alpha) {
  const double c = kolmogorov_quantile(1.0 - alpha);
  return c * std::sqrt(static_cast<double>(n1 + n2) /
                       (static_cast<double>(n1) * static_cast<double>(n2)));
}

double pairwise_sum(const std::vector<double>& v) {
  // Tree reduction over fixed index ranges.
  std::function<double(std::size_t, std::size_t)> rec =
      [&](std::size_t lo, std::size_t hi) -> double {
    if (hi - lo <= 8) {
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += v[i];
      return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return rec(lo, mid) + rec(mid, hi);
  };
  return v.empty() ? 0.0 : rec(0, v.size());
}

std::vector<MeanSe> mc_laplace(int n, int h, const std::vector<double>& a,
                               const std::vector<double>& b,
                               const std::vector<double>& s_grid, int replicas,
                               std::uint64_t base_seed, int threads,
                               std::uint64_t tag) {
  if (replicas < 2) {
    throw std::invalid_argument("mc_laplace: need at least 2 replicas");
  }
  if (s_grid.empty()) {
    throw std::invalid_argument("mc_laplace: empty s grid");
  }
  std::vector<double> log_s(s_grid.size());
  for (std::size_t k = 0; k < s_grid.size(); ++k) {
    if (!(s_grid[k] > 0.0)) {
      throw std::invalid_argument("mc_laplace: s must be positive");
    }
    log_s[k] = std::log(s_grid[k]);
  }

  // vals[k] holds all replica values of exp(-s_k Z), indexed by replica.
  std::vector<std::vector<double>> vals(s_grid.size(),
                                        std::vector<double>(replicas));
  parallel_for(replicas, threads, [&](std::int64_t r) {
    RngStream rng = RngStream::for_replica(base_seed, static_cast<std::uint64_t>(r), tag);
    const polymer::Instance inst = polymer::sample_instance_general(n, h, a, b, rng);
    const double log_z = polymer::partition_log(inst);
    for (std::size_t k = 0; k < log_s.size(); ++k) {
      const double t = log_s[k] + log_z;
      vals[k][r] = (t > 700.0) ? 0.0 : std::exp(-std::exp(t));
    }
  });

  std::vector<MeanSe> out(s_grid.size());
  std::vector<double> sq(replicas);
  for (std::size_t k = 0; k < s_grid.size(); ++k) {
    const double mean = pairwise_sum(vals[k]) / replicas;
    for (int r = 0; r < replicas; ++r) {
      const double d = vals[k][r] - mean;
      sq[r] = d * d;
    }
    const double var = pairwise_sum(sq) / (static_cast<double>(replicas) - 1.0);
    out[k] = MeanSe{mean, std::sqrt(var / replicas)};
  }
  return out;
}

}  // namespace gpoly::stats
