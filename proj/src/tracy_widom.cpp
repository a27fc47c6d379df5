#include "gpoly/tracy_widom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/fredholm.hpp"
#include "gpoly/parallel.hpp"

namespace gpoly::tw {

double tracy_widom_point(double x, double truncation, int order) {
  return fredholm::det_limit(2.0, x, truncation, order);
}

namespace {

struct Spline {
  std::vector<double> x, y, d;  // knots, values, endpoint slopes per knot
};

int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Fritsch-Carlson monotone slopes on a non-uniform grid.
std::vector<double> monotone_slopes(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> h(n - 1), del(n - 1), d(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    del[i] = (y[i + 1] - y[i]) / h[i];
  }
  d[0] = del[0];
  d[n - 1] = del[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (del[i - 1] * del[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
    }
  }
  // Clamp endpoint and interior slopes into the monotone region.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (del[i] == 0.0) {
      d[i] = d[i + 1] = 0.0;
      continue;
    }
    const double alpha = d[i] / del[i];
    const double beta = d[i + 1] / del[i];
    const double norm = alpha * alpha + beta * beta;
    if (norm > 9.0) {
      const double tau = 3.0 / std::sqrt(norm);
      d[i] = tau * alpha * del[i];
      d[i + 1] = tau * beta * del[i];
    }
  }
  return d;
}

Spline build_spline() {
  std::vector<double> xs;
  for (double x = -15.0; x < -8.0 - 1e-9; x += 0.5) xs.push_back(x);
  for (double x = -8.0; x < 4.0 - 1e-9; x += 0.02) xs.push_back(x);
  for (double x = 4.0; x <= 10.0 + 1e-9; x += 0.25) xs.push_back(x);

  std::vector<double> ys(xs.size());
  parallel_for(static_cast<std::int64_t>(xs.size()), default_threads(),
               [&](std::int64_t i) { ys[i] = tracy_widom_point(xs[i]); });

  // The raw determinant values can dip microscopically below 0 or lose
  // monotonicity at the 1e-10 level in the far tails; repair that, but treat
  // larger violations as a real failure.
  double run = 0.0;
  for (double& v : ys) {
    const double orig = v;
    v = std::min(1.0, std::max(run, v));
    if (std::abs(v - orig) > 1e-7) {
      throw numerical_error("tracy_widom_cdf: grid values not monotone");
    }
    run = v;
  }

  Spline s;
  s.x = std::move(xs);
  s.y = std::move(ys);
  s.d = monotone_slopes(s.x, s.y);
  return s;
}

const Spline& spline() {
  static const Spline s = build_spline();
  return s;
}

}  // namespace

double tracy_widom_cdf(double x) {
  if (!(x >= -15.0 && x <= 10.0)) {
    throw std::out_of_range("tracy_widom_cdf: argument outside [-15, 10]");
  }
  const Spline& s = spline();
  const auto it = std::upper_bound(s.x.begin(), s.x.end(), x);
  const std::size_t i =
      std::min(s.x.size() - 2,
               static_cast<std::size_t>(
                   std::max<std::ptrdiff_t>(0, it - s.x.begin() - 1)));
  const double h = s.x[i + 1] - s.x[i];
  const double t = (x - s.x[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double v = (2.0 * t3 - 3.0 * t2 + 1.0) * s.y[i] +
                   (t3 - 2.0 * t2 + t) * h * s.d[i] +
                   (-2.0 * t3 + 3.0 * t2) * s.y[i + 1] +
                   (t3 - t2) * h * s.d[i + 1];
  return std::min(1.0, std::max(0.0, v));
}

double tracy_widom_cdf_clamped(double x) {
  if (x < -15.0) return 0.0;
  if (x > 10.0) return 1.0;
  return tracy_widom_cdf(x);
}

namespace {

double simpson(const std::vector<double>& f, double step) {
  // f over a uniform grid with an even number of intervals
  double acc = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    acc += f[i] * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * step / 3.0;
}

}  // namespace

Moments tracy_widom_moments(int threads) {
  const double step = 0.1;
  const int n_neg = 120, n_pos = 80;  // [-12, 0] and [0, 8]
  std::vector<double> fneg(n_neg + 1), fpos(n_pos + 1);
  parallel_for(n_neg + n_pos + 2, threads, [&](std::int64_t i) {
    if (i <= n_neg) {
      fneg[i] = fredholm::det_limit(2.0, -12.0 + step * i, 20.0, 96);
    } else {
      const std::int64_t j = i - n_neg - 1;
      fpos[j] = fredholm::det_limit(2.0, step * j, 20.0, 96);
    }
  });

  std::vector<double> gneg(n_neg + 1), gpos(n_pos + 1);
  for (int i = 0; i <= n_pos; ++i) gpos[i] = 1.0 - fpos[i];
  const double mean = -simpson(fneg, step) + simpson(gpos, step);
  for (int i = 0; i <= n_neg; ++i) {
    gneg[i] = -2.0 * (-12.0 + step * i) * fneg[i];
  }
  std::vector<double> g2(n_pos + 1);
  for (int i = 0; i <= n_pos; ++i) g2[i] = 2.0 * (step * i) * (1.0 - fpos[i]);
  const double ex2 = simpson(gneg, step) + simpson(g2, step);
  return Moments{mean, ex2 - mean * mean};
}

}  // namespace gpoly::tw
