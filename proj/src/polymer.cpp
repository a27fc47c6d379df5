#include "gpoly/polymer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gpoly/errors.hpp"
#include "gpoly/specfn.hpp"

namespace gpoly::polymer {

namespace {

void check_dims(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("polymer: dimensions must be positive");
  }
}

// ln(e^x + e^y) without overflow.
double lse(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

}  // namespace

Instance sample_instance(int m, int n, double shape, RngStream& rng) {
  check_dims(m, n);
  Instance inst(m, n);
  for (double& v : inst.g) {
    v = specfn::gamma_sample(shape, rng);
  }
  return inst;
}

std::vector<double> shape_matrix(int n, int h, const std::vector<double>& a,
                                 const std::vector<double>& b) {
  check_dims(h - n + 1, n);
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != h) {
    throw std::invalid_argument("shape_matrix: need |a| = n and |b| = h = m+n-1");
  }
  const int m = h - n + 1;
  std::vector<double> s(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = a[n - j - 1] + b[i + j];
      if (!(v > 0.0)) {
        throw std::invalid_argument("shape_matrix: a_j + b_i must be positive");
      }
      s[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  return s;
}

Instance sample_instance_general(int n, int h, const std::vector<double>& a,
                                 const std::vector<double>& b, RngStream& rng) {
  const std::vector<double> s = shape_matrix(n, h, a, b);
  const int m = h - n + 1;
  Instance inst(m, n);
  for (std::size_t k = 0; k < inst.g.size(); ++k) {
    inst.g[k] = specfn::gamma_sample(s[k], rng);
  }
  return inst;
}

Instance sample_exponential(int m, int n, RngStream& rng) {
  check_dims(m, n);
  Instance inst(m, n);
  for (double& v : inst.g) {
    v = -std::log(rng.uniform());
  }
  return inst;
}

double partition_log_from_logs(int m, int n, const std::vector<double>& log_g) {
  check_dims(m, n);
  if (log_g.size() != static_cast<std::size_t>(m) * n) {
    throw std::invalid_argument("partition_log_from_logs: size mismatch");
  }
  for (double v : log_g) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("partition_log_from_logs: entries must be finite");
    }
  }
  // L[j] = ln of the partition restricted to paths ending at column j of the
  // current row; the prefix log-sum runs inside the same sweep.
  std::vector<double> L(log_g.begin(), log_g.begin() + n);
  for (int i = 1; i < m; ++i) {
    double prefix = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      prefix = lse(prefix, L[j]);
      L[j] = log_g[static_cast<std::size_t>(i) * n + j] + prefix;
    }
  }
  double total = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    total = lse(total, L[j]);
  }
  return total;
}

double partition_log(const Instance& inst) {
  check_dims(inst.m, inst.n);
  std::vector<double> logs(inst.g.size());
  for (std::size_t k = 0; k < inst.g.size(); ++k) {
    if (!(inst.g[k] > 0.0)) {
      throw std::invalid_argument("partition_log: weights must be positive");
    }
    logs[k] = std::log(inst.g[k]);
  }
  return partition_log_from_logs(inst.m, inst.n, logs);
}

double fpp_min(const Instance& inst) {
  check_dims(inst.m, inst.n);
  const int n = inst.n;
  std::vector<double> L(n);
  for (int j = 0; j < n; ++j) {
    L[j] = inst.at(0, j);
  }
  for (int i = 1; i < inst.m; ++i) {
    double prefix = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      prefix = std::min(prefix, L[j]);
      L[j] = inst.at(i, j) + prefix;
    }
  }
  return *std::min_element(L.begin(), L.end());
}

std::uint64_t path_count(int m, int n) {
  check_dims(m, n);
  // binomial(n+m-1, m) with overflow saturation.
  long double r = 1.0L;
  for (int k = 1; k <= m; ++k) {
    r *= static_cast<long double>(n - 1 + k) / k;
    if (r > 1.8e18L) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(r + 0.5L);
}

namespace {

// Visits every non-decreasing column sequence; fn receives the fixed-size
// index buffer for the current path.
template <typename Fn>
void for_each_path(const Instance& inst, Fn&& fn) {
  if (path_count(inst.m, inst.n) > 1000000ULL) {
    throw budget_error("brute force enumeration beyond 1e6 paths");
  }
  std::vector<int> j(inst.m, 0);
  for (;;) {
    fn(j);
    int i = inst.m - 1;
    while (i >= 0 && j[i] == inst.n - 1) --i;
    if (i < 0) break;
    const int v = j[i] + 1;
    for (int k = i; k < inst.m; ++k) j[k] = v;
  }
}

}  // namespace

double brute_force_partition_log(const Instance& inst) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  for_each_path(inst, [&](const std::vector<int>& j) {
    double t = 0.0;
    for (int i = 0; i < inst.m; ++i) t += std::log(inst.at(i, j[i]));
    logs.push_back(t);
    best = std::max(best, t);
  });
  double s = 0.0;
  for (double t : logs) s += std::exp(t - best);
  return best + std::log(s);
}

double brute_force_fpp(const Instance& inst) {
  double best = std::numeric_limits<double>::infinity();
  for_each_path(inst, [&](const std::vector<int>& j) {
    double t = 0.0;
    for (int i = 0; i < inst.m; ++i) t += inst.at(i, j[i]);
    best = std::min(best, t);
  });
  return best;
}

}  // namespace gpoly::polymer
