#include "gpoly/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace gpoly::contour {

namespace {

constexpr double kPi = 3.14159265358979323846;

Piece segment(cd z0, cd z1) {
  const cd d = z1 - z0;
  return Piece{[z0, d](double t) { return z0 + d * t; },
               [d](double) { return d; }};
}

void add_segment(Contour& c, cd z0, cd z1, int split = 1) {
  for (int k = 0; k < split; ++k) {
    const cd a = z0 + (z1 - z0) * (static_cast<double>(k) / split);
    const cd b = z0 + (z1 - z0) * (static_cast<double>(k + 1) / split);
    c.pieces.push_back(segment(a, b));
  }
}

Piece arc(cd center, double radius, double theta0, double theta1) {
  return Piece{[=](double t) {
                 const double th = theta0 + (theta1 - theta0) * t;
                 return center + radius * std::polar(1.0, th);
               },
               [=](double t) {
                 const double th = theta0 + (theta1 - theta0) * t;
                 return cd(0.0, 1.0) * (theta1 - theta0) * radius *
                        std::polar(1.0, th);
               }};
}

int leg_split(int n) {
  return std::max(1, static_cast<int>(std::ceil(std::cbrt(static_cast<double>(n)) / 2.0)));
}

}  // namespace

void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w) {
  if (order < 1) {
    throw std::domain_error("gauss_legendre: order must be positive");
  }
  x.assign(order, 0.0);
  w.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double xi = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (xi * p1 - p0) / (xi * xi - 1.0);
      const double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    x[i] = -xi;
    x[order - 1 - i] = xi;
    const double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
    w[i] = wi;
    w[order - 1 - i] = wi;
  }
  return;
}

QuadratureRule quadrature(const Contour& c, int order) {
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  QuadratureRule rule;
  rule.nodes.reserve(c.pieces.size() * order);
  rule.weights.reserve(c.pieces.size() * order);
  for (const Piece& p : c.pieces) {
    for (int i = 0; i < order; ++i) {
      const double t = 0.5 * (gx[i] + 1.0);
      rule.nodes.push_back(p.z(t));
      rule.weights.push_back(0.5 * gw[i] * p.dz(t));
    }
  }
  return rule;
}

Contour circle(cd center, double radius) {
  if (!(radius > 0.0)) {
    throw std::domain_error("circle: radius must be positive");
  }
  Contour c;
  c.closed = true;
  for (const auto& [t0, t1] : {std::pair{0.0, 0.5}, std::pair{0.5, 1.0}}) {
    c.pieces.push_back(Piece{
        [=](double t) {
          return center + radius * std::polar(1.0, 2.0 * kPi * (t0 + (t1 - t0) * t));
        },
        [=](double t) {
          return cd(0.0, 2.0 * kPi * (t1 - t0)) * radius *
                 std::polar(1.0, 2.0 * kPi * (t0 + (t1 - t0) * t));
        }});
  }
  return c;
}

Contour vline(double x0, double T) {
  if (!(T > 0.0)) {
    throw std::domain_error("vline: truncation must be positive");
  }
  std::vector<double> bp{0.0, 0.75, 1.75, 3.0, 4.5, 6.5, 9.0, 12.5, 17.0, 23.0, 31.0, 41.0};
  while (bp.back() >= T) bp.pop_back();
  while (bp.back() > 0.0 && bp.back() * 1.35 < T) bp.push_back(bp.back() * 1.35);
  bp.push_back(T);

  Contour c;
  for (std::size_t i = bp.size() - 1; i >= 1; --i) {
    add_segment(c, cd(x0, -bp[i]), cd(x0, -bp[i - 1]));
  }
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    add_segment(c, cd(x0, bp[i]), cd(x0, bp[i + 1]));
  }
  return c;
}

Contour polyline(const std::vector<cd>& points, int split) {
  if (points.size() < 2) {
    throw std::domain_error("polyline: need at least two points");
  }
  if (split < 1) {
    throw std::domain_error("polyline: split must be positive");
  }
  Contour c;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    add_segment(c, points[i], points[i + 1], split);
  }
  return c;
}

Contour steepest_v(const asymptotics::Constants& k, int n) {
  if (n < 1) {
    throw std::domain_error("steepest_v: n must be positive");
  }
  if (!(k.c > 1.0)) {
    throw std::domain_error("steepest_v: c must exceed 1");
  }
  const int split = leg_split(n);
  Contour c;
  c.closed = true;
  // The closed descent contour must stay clear of the integrand pole at -1;
  // reshaping it instead would change which coupling poles it encloses, so
  // parameter combinations that push it past -0.9 are rejected outright.
  if (k.c <= 2.5) {
    const double L = 2.0 * k.gamma / (k.c - 1.0);
    if (L >= 0.9) {
      throw std::domain_error(
          "steepest_v: side length 2 gamma/(c-1) reaches the pole at -1; "
          "shape parameter too large for this aspect ratio");
    }
    const cd top = k.z_star + L * std::polar(1.0, 2.0 * kPi / 3.0);
    add_segment(c, k.z_star, top, split);
    add_segment(c, top, cd(-L, 0.0));
    add_segment(c, cd(-L, 0.0), std::conj(top));
    add_segment(c, std::conj(top), k.z_star, split);
  } else {
    const double R = 6.0 * k.gamma / (5.0 * (std::sqrt(k.c) - 1.0));
    if (k.z_star - R <= -0.9) {
      throw std::domain_error(
          "steepest_v: circular sweep reaches the pole at -1; "
          "shape parameter too large for this aspect ratio");
    }
    const cd top = k.z_star + R * std::polar(1.0, 2.0 * kPi / 3.0);
    add_segment(c, k.z_star, top, split);
    c.pieces.push_back(arc(k.z_star, R, 2.0 * kPi / 3.0, kPi));
    c.pieces.push_back(arc(k.z_star, R, kPi, 4.0 * kPi / 3.0));
    add_segment(c, std::conj(top), k.z_star, split);
  }
  return c;
}

Contour steepest_w(const asymptotics::Constants& k, int n) {
  if (n < 1) {
    throw std::domain_error("steepest_w: n must be positive");
  }
  if (!(k.c > 1.0)) {
    throw std::domain_error("steepest_w: c must exceed 1");
  }
  const int split = leg_split(n);
  const double junction = k.z_star + k.gamma * std::pow(n, -1.0 / 3.0);
  const double L = 2.0 * k.gamma / (k.c - 1.0);
  const cd hi = junction + L * std::polar(1.0, kPi / 3.0);
  const cd lo = std::conj(hi);
  const double T = hi.imag() + 2.0 + 160.0 / (n * (k.c - 1.0) * kPi);
  Contour c;
  add_segment(c, cd(lo.real(), -T), lo, 2);
  add_segment(c, lo, cd(junction, 0.0), split);
  add_segment(c, cd(junction, 0.0), hi, split);
  add_segment(c, hi, cd(hi.real(), T), 2);
  return c;
}

Contour wedge_v(double x, double truncation) {
  if (!(truncation > 0.0)) {
    throw std::domain_error("wedge_v: truncation must be positive");
  }
  const cd up = std::polar(1.0, 2.0 * kPi / 3.0);
  Contour c;
  if (x >= -1.0) {
    add_segment(c, truncation * std::conj(up), cd(0.0, 0.0));
    add_segment(c, cd(0.0, 0.0), truncation * up);
    return c;
  }
  const double s1 = std::sqrt(-x);
  const double eta = std::min(0.3, std::max(0.1, 3.0 / std::abs(x)));
  const cd lo(-eta, -s1), hi(-eta, s1);
  add_segment(c, lo + truncation * std::conj(up), lo);
  add_segment(c, lo, cd(-eta, 0.0));
  add_segment(c, cd(-eta, 0.0), hi);
  add_segment(c, hi, hi + truncation * up);
  return c;
}

Contour wedge_w(double x, double truncation, double offset) {
  if (!(truncation > 0.0)) {
    throw std::domain_error("wedge_w: truncation must be positive");
  }
  if (!(offset > 0.0)) {
    throw std::domain_error("wedge_w: offset must be positive");
  }
  const cd up = std::polar(1.0, kPi / 3.0);
  Contour c;
  if (x >= -1.0) {
    add_segment(c, offset + truncation * std::conj(up), cd(offset, 0.0));
    add_segment(c, cd(offset, 0.0), offset + truncation * up);
    return c;
  }
  const double s1 = std::sqrt(-x);
  const double eta = std::min(0.3, std::max(0.1, 3.0 / std::abs(x)));
  const cd lo(eta, -s1), hi(eta, s1);
  add_segment(c, lo + truncation * std::conj(up), lo);
  add_segment(c, lo, cd(eta, 0.0));
  add_segment(c, cd(eta, 0.0), hi);
  add_segment(c, hi, hi + truncation * up);
  return c;
}

}  // namespace gpoly::contour
