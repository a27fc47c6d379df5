#include "gpoly/grsk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gpoly/errors.hpp"

namespace gpoly::grsk {

namespace {

void check_matrix(const Matrix& W) {
  if (W.h < 1 || W.n < 1) {
    throw std::invalid_argument("grsk: dimensions must be positive");
  }
  for (double v : W.w) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("grsk: entries must be positive");
    }
  }
}

double lse(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

// A single up/right path from (1, start) to (h, end) is the non-decreasing
// sequence exit[0..h-2] of columns where it leaves each row (all 1-based
// columns; row i occupies columns exit[i-2]..exit[i-1] with the obvious
// boundary conventions).  The odometer walks all such sequences.
struct PathIter {
  int start, end, h;
  std::vector<int> exit;  // h-1 entries; empty when h == 1

  void reset() { exit.assign(h > 0 ? h - 1 : 0, start); }

  bool advance() {
    for (int i = static_cast<int>(exit.size()) - 1; i >= 0; --i) {
      if (exit[i] < end) {
        const int v = exit[i] + 1;
        for (std::size_t k = i; k < exit.size(); ++k) exit[k] = v;
        return true;
      }
    }
    return false;
  }

  // Marks visited cells in into (h x n, row-major), returns false on overlap.
  bool stamp(std::vector<char>& into, int n) const {
    int col = start;
    for (int row = 1; row <= h; ++row) {
      const int last = (row == h) ? end : exit[row - 1];
      for (int c = col; c <= last; ++c) {
        char& cell = into[static_cast<std::size_t>(row - 1) * n + (c - 1)];
        if (cell) return false;
        cell = 1;
      }
      col = last;
    }
    return true;
  }
};

double binomial_ld(int nn, int kk) {
  long double r = 1.0L;
  for (int i = 1; i <= kk; ++i) r *= static_cast<long double>(nn - kk + i) / i;
  return static_cast<double>(r);
}

}  // namespace

Matrix transpose(const Matrix& W) {
  Matrix T(W.n, W.h);
  for (int i = 0; i < W.h; ++i) {
    for (int j = 0; j < W.n; ++j) {
      T.at(j, i) = W.at(i, j);
    }
  }
  return T;
}

double tau_log(const Matrix& W, int k, int r) {
  check_matrix(W);
  if (r == 0) return 0.0;
  if (k < 1 || k > W.n || r < 1 || r > std::min(W.h, k)) {
    throw std::invalid_argument("tau_log: need 1 <= r <= min(h,k), k <= n");
  }
  const double per_path = binomial_ld(k - r + W.h - 1, W.h - 1);
  if (std::pow(per_path, r) > 1e6) {
    throw budget_error("tau_log: tuple enumeration beyond 1e6");
  }

  std::vector<PathIter> paths(r);
  for (int p = 0; p < r; ++p) {
    paths[p] = PathIter{p + 1, k - r + p + 1, W.h, {}};
    paths[p].reset();
  }
  std::vector<double> logw(W.w.size());
  for (std::size_t i = 0; i < W.w.size(); ++i) logw[i] = std::log(W.w[i]);

  std::vector<char> mask(static_cast<std::size_t>(W.h) * W.n);
  double total = -std::numeric_limits<double>::infinity();
  for (;;) {
    std::fill(mask.begin(), mask.end(), 0);
    bool disjoint = true;
    for (const PathIter& p : paths) {
      if (!p.stamp(mask, W.n)) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) {
      double t = 0.0;
      for (std::size_t c = 0; c < mask.size(); ++c) {
        if (mask[c]) t += logw[c];
      }
      total = lse(total, t);
    }
    // Odometer over the tuple of paths.
    int p = r - 1;
    while (p >= 0 && !paths[p].advance()) {
      paths[p].reset();
      --p;
    }
    if (p < 0) break;
  }
  if (total == -std::numeric_limits<double>::infinity()) {
    throw numerical_error("tau_log: no disjoint tuple found");
  }
  return total;
}

namespace {

// Fills ln t on the cells i - j >= h - n (1-based) via the ratio ladder.
void fill_direct(const Matrix& W, std::vector<double>& t_log, int stride) {
  for (int k = 1; k <= W.n; ++k) {
    double prev = 0.0;
    for (int r = 1; r <= std::min(W.h, k); ++r) {
      const double cur = tau_log(W, k, r);
      const int i = W.h - r + 1, j = k - r + 1;
      t_log[static_cast<std::size_t>(i - 1) * stride + (j - 1)] = cur - prev;
      prev = cur;
    }
  }
}

}  // namespace

Image grsk_map(const Matrix& W) {
  check_matrix(W);
  const double unset = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> t(static_cast<std::size_t>(W.h) * W.n, unset);
  fill_direct(W, t, W.n);

  const Matrix Wt = transpose(W);
  std::vector<double> tt(static_cast<std::size_t>(Wt.h) * Wt.n, unset);
  fill_direct(Wt, tt, Wt.n);

  for (int i = 1; i <= W.h; ++i) {
    for (int j = 1; j <= W.n; ++j) {
      const double mirrored = tt[static_cast<std::size_t>(j - 1) * Wt.n + (i - 1)];
      double& direct = t[static_cast<std::size_t>(i - 1) * W.n + (j - 1)];
      if (std::isnan(direct)) {
        direct = mirrored;
      } else if (!std::isnan(mirrored) && std::abs(direct - mirrored) > 1e-10) {
        throw validation_error("grsk_map: transpose overlap mismatch");
      }
    }
  }
  return Image{W.h, W.n, std::move(t)};
}

polymer::Instance complement_instance(const Matrix& W) {
  check_matrix(W);
  if (W.h < W.n) {
    throw std::invalid_argument("complement_instance: requires h >= n");
  }
  const int m = W.h - W.n + 1;
  polymer::Instance inst(m, W.n);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= W.n; ++j) {
      inst.at(i - 1, j - 1) = 1.0 / W.at(i + j - 2, W.n - j);
    }
  }
  return inst;
}

}  // namespace gpoly::grsk
