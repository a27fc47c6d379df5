#include "gpoly/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gpoly/errors.hpp"
#include "gpoly/linalg.hpp"
#include "gpoly/specfn.hpp"

namespace gpoly::fredholm {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cd kTwoPiI{0.0, 2.0 * kPi};

// C (nv x nv) += A (nv x nw) times B (nw x nv), row-major, ikj loop order.
void matmul(const std::vector<cd>& A, const std::vector<cd>& B,
            std::vector<cd>& C, int nv, int nw) {
  C.assign(static_cast<std::size_t>(nv) * nv, cd{0.0, 0.0});
  for (int i = 0; i < nv; ++i) {
    for (int k = 0; k < nw; ++k) {
      const cd a = A[static_cast<std::size_t>(i) * nw + k];
      if (a == cd{0.0, 0.0}) continue;
      const cd* brow = &B[static_cast<std::size_t>(k) * nv];
      cd* crow = &C[static_cast<std::size_t>(i) * nv];
      for (int j = 0; j < nv; ++j) crow[j] += a * brow[j];
    }
  }
}

double real_with_imag_check(cd det, const char* what) {
  if (std::abs(det.imag()) > 1e-8 * (1.0 + std::abs(det))) {
    throw numerical_error(std::string(what) +
                          ": imaginary residue above tolerance");
  }
  return det.real();
}

cd sine_factor(cd v1, cd w) {
  const cd s = std::sin(kPi * (v1 - w));
  if (std::abs(s) < 1e-14) {
    throw numerical_error("contour configuration: node collides with a sine pole");
  }
  return kPi / s;
}

// Shared assembly for kernels of the form
//   K(v1, v2) = Qv(v1) * sum_k coupling(v1, w_k) Pw(w_k) / (w_k - v2),
// where Pw already carries the inner weight and 1/(2 pi i). The coupling is
// pi/sin(pi(v1-w)) when sine is set and 1/(v1-w) otherwise.
double assemble_det(const contour::QuadratureRule& vr,
                    const contour::QuadratureRule& wr,
                    const std::vector<cd>& Qv, const std::vector<cd>& Pw,
                    bool sine, const char* what) {
  const int nv = static_cast<int>(vr.nodes.size());
  const int nw = static_cast<int>(wr.nodes.size());
  std::vector<cd> A(static_cast<std::size_t>(nv) * nw);
  std::vector<cd> B(static_cast<std::size_t>(nw) * nv);
  for (int i = 0; i < nv; ++i) {
    for (int k = 0; k < nw; ++k) {
      const cd coup = sine ? sine_factor(vr.nodes[i], wr.nodes[k])
                           : 1.0 / (vr.nodes[i] - wr.nodes[k]);
      A[static_cast<std::size_t>(i) * nw + k] = Qv[i] * coup * Pw[k];
    }
  }
  for (int k = 0; k < nw; ++k) {
    for (int j = 0; j < nv; ++j) {
      B[static_cast<std::size_t>(k) * nv + j] =
          vr.weights[j] / (kTwoPiI * (wr.nodes[k] - vr.nodes[j]));
    }
  }
  std::vector<cd> M;
  matmul(A, B, M, nv, nw);
  for (int i = 0; i < nv; ++i) M[static_cast<std::size_t>(i) * nv + i] += 1.0;
  return real_with_imag_check(linalg::det_destructive(M, nv), what);
}

// n H(z) with exact integer multiplicity on the ln Gamma(gamma + z) term,
// so the exponential stays single-valued across the branch cuts.
cd n_times_h(cd z, const asymptotics::Constants& k, int n) {
  const long long cn = std::llround(k.c_n_tilde * n);
  return static_cast<double>(n) * specfn::log_gamma(z) -
         static_cast<double>(cn) * specfn::log_gamma(k.gamma + z) +
         static_cast<double>(n) * k.mu * z;
}

}  // namespace

void validate(const Params& p) {
  if (p.n < 1 || p.h < 1) {
    throw validation_error("params: n and h must be positive");
  }
  if (p.a.size() != static_cast<std::size_t>(p.n) ||
      p.b.size() != static_cast<std::size_t>(p.h)) {
    throw validation_error("params: a must have length n and b length h");
  }
  if (!(p.s > 0.0)) {
    throw validation_error("params: s must be positive");
  }
  if (!(p.delta1 > 0.0 && p.delta1 < std::min(p.delta2, 1.0 - p.delta2))) {
    throw validation_error(
        "params: need 0 < delta1 < min(delta2, 1 - delta2)");
  }
  for (double aj : p.a) {
    if (!(std::abs(aj) < p.delta1)) {
      throw validation_error("params: each |a_j| must be below delta1");
    }
  }
  for (double bi : p.b) {
    if (!(bi > p.delta2)) {
      throw validation_error("params: each b_i must exceed delta2");
    }
  }
}

cd log_fs(cd z, const Params& p) {
  cd acc = z * std::log(p.s);
  for (double bi : p.b) acc += specfn::log_gamma(bi + z);
  return acc;
}

double auto_truncation(const Params& p) {
  // Log-magnitude of the w-integrand along delta2 + i t, with the sine
  // factor modeled by its exponential decay.
  const auto mag = [&](double t) {
    const cd w{p.delta2, t};
    double v = log_fs(w, p).real();
    for (double aj : p.a) v -= specfn::log_gamma(w - aj).real();
    return v - kPi * t;
  };
  double peak = mag(0.0);
  const double drop = 14.0 * std::log(10.0);
  double t = 1.0;
  while (t < 1e4) {
    const double v = mag(t);
    peak = std::max(peak, v);
    if (v <= peak - drop) {
      return std::max(50.0, 1.2 * t);
    }
    t = (t < 50.0) ? t + 1.0 : t * 1.1;
  }
  throw numerical_error(
      "auto_truncation: integrand does not decay on the vertical line");
}

double nystrom_det(const contour::QuadratureRule& rule, const Kernel& kernel) {
  const int n = static_cast<int>(rule.nodes.size());
  std::vector<cd> M(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      M[static_cast<std::size_t>(i) * n + j] =
          (i == j ? 1.0 : 0.0) +
          kernel(rule.nodes[i], rule.nodes[j]) * rule.weights[j] / kTwoPiI;
    }
  }
  return real_with_imag_check(linalg::det_destructive(M, n), "nystrom_det");
}

cd kernel_finite_lt(cd v1, cd v2, const Params& p,
                    const contour::QuadratureRule& w_rule) {
  cd lead = -log_fs(v1, p);
  for (double aj : p.a) lead += specfn::log_gamma(v1 - aj);
  const cd qv = std::exp(lead);
  cd acc{0.0, 0.0};
  for (std::size_t k = 0; k < w_rule.nodes.size(); ++k) {
    const cd w = w_rule.nodes[k];
    cd ew = log_fs(w, p);
    for (double aj : p.a) ew -= specfn::log_gamma(w - aj);
    acc += w_rule.weights[k] / (w - v2) * sine_factor(v1, w) * std::exp(ew);
  }
  return qv * acc / kTwoPiI;
}

double det_finite_lt(const Params& p, int order) {
  validate(p);
  if (order < 4) throw std::invalid_argument("det_finite_lt: order too small");
  const auto vr = contour::quadrature(contour::circle(cd{0.0, 0.0}, p.delta1), order);
  const auto wr =
      contour::quadrature(contour::vline(p.delta2, auto_truncation(p)), order);

  std::vector<cd> Qv(vr.nodes.size()), Pw(wr.nodes.size());
  for (std::size_t i = 0; i < vr.nodes.size(); ++i) {
    cd e = -log_fs(vr.nodes[i], p);
    for (double aj : p.a) e += specfn::log_gamma(vr.nodes[i] - aj);
    Qv[i] = std::exp(e);
  }
  for (std::size_t k = 0; k < wr.nodes.size(); ++k) {
    cd e = log_fs(wr.nodes[k], p);
    for (double aj : p.a) e -= specfn::log_gamma(wr.nodes[k] - aj);
    Pw[k] = wr.weights[k] * std::exp(e) / kTwoPiI;
  }
  return assemble_det(vr, wr, Qv, Pw, true, "det_finite_lt");
}

double det_matrix_formula(const Params& p, int order) {
  validate(p);
  if (order < 4) {
    throw std::invalid_argument("det_matrix_formula: order too small");
  }
  for (int j = 0; j < p.n; ++j) {
    for (int l = j + 1; l < p.n; ++l) {
      if (std::abs(p.a[j] - p.a[l]) < 1e-12) {
        throw validation_error(
            "det_matrix_formula: coincident a parameters; perturb them to be "
            "distinct and extrapolate");
      }
    }
  }
  const auto wr =
      contour::quadrature(contour::vline(p.delta2, auto_truncation(p)), order);
  const std::size_t nw = wr.nodes.size();

  std::vector<cd> G(nw);
  for (std::size_t k = 0; k < nw; ++k) {
    cd e = log_fs(wr.nodes[k], p);
    for (double aj : p.a) e -= specfn::log_gamma(wr.nodes[k] - aj);
    G[k] = std::exp(e);
  }

  std::vector<cd> M(static_cast<std::size_t>(p.n) * p.n, cd{0.0, 0.0});
  for (int j = 0; j < p.n; ++j) {
    double cj = std::exp(-log_fs(cd{p.a[j], 0.0}, p).real());
    for (int l = 0; l < p.n; ++l) {
      if (l != j) cj *= std::tgamma(p.a[j] - p.a[l]);
    }
    for (int l = 0; l < p.n; ++l) {
      cd acc{0.0, 0.0};
      for (std::size_t k = 0; k < nw; ++k) {
        const cd w = wr.nodes[k];
        acc += wr.weights[k] / (w - p.a[l]) * cj * G[k] *
               sine_factor(cd{p.a[j], 0.0}, w);
      }
      M[static_cast<std::size_t>(j) * p.n + l] = acc / kTwoPiI;
    }
    M[static_cast<std::size_t>(j) * p.n + j] += 1.0;
  }
  return real_with_imag_check(linalg::det_destructive(M, p.n),
                              "det_matrix_formula");
}

double det_matrix_formula_extrapolated(const Params& p, int order) {
  const auto perturbed = [&](double eps) {
    Params q = p;
    for (int j = 0; j < q.n; ++j) q.a[j] += eps * (j + 1);
    return det_matrix_formula(q, order);
  };
  const double d0 = perturbed(2e-2);
  const double d1 = perturbed(1e-2);
  const double d2 = perturbed(5e-3);
  const double r1 = 2.0 * d1 - d0;
  const double r2 = 2.0 * d2 - d1;
  return (4.0 * r2 - r1) / 3.0;
}

double sklyanin_lt(const Params& p, double T, int order) {
  validate(p);
  if (p.n > 2) {
    throw validation_error("sklyanin_lt: direct integral only for n <= 2");
  }
  if (!(T > 0.0) || order < 4) {
    throw std::invalid_argument("sklyanin_lt: bad truncation or order");
  }
  // The spectral contour runs on the imaginary axis, which must stay to the
  // left of every pole of Gamma(a_j - lambda); that forces a_j > 0 here.
  for (double aj : p.a) {
    if (!(aj > 0.0)) {
      throw validation_error("sklyanin_lt: direct integral needs a_j > 0");
    }
  }

  // Per-variable decay estimate at the truncation height.
  const auto per_var_log = [&](double t) {
    double v = 0.0;
    for (int j = 0; j < p.n; ++j) {
      v += specfn::log_gamma(cd{p.a[j], -t}).real();
    }
    for (double bi : p.b) v += specfn::log_gamma(cd{bi, t}).real();
    return v;
  };
  if (std::exp(per_var_log(T) - per_var_log(0.0)) > 1e-10) {
    throw numerical_error("sklyanin_lt: truncation tail above tolerance");
  }

  std::vector<double> bp{0.0, 1.0, 2.5, 4.5, 7.0, 10.0};
  while (bp.back() >= T) bp.pop_back();
  bp.push_back(T);
  std::vector<double> gx, gw;
  contour::gauss_legendre(order, gx, gw);
  std::vector<double> t, wt;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    for (double sgn : {-1.0, 1.0}) {
      const double lo = sgn > 0 ? bp[i] : -bp[i + 1];
      const double hi = sgn > 0 ? bp[i + 1] : -bp[i];
      for (int q = 0; q < order; ++q) {
        t.push_back(0.5 * (hi - lo) * gx[q] + 0.5 * (hi + lo));
        wt.push_back(0.5 * (hi - lo) * gw[q]);
      }
    }
  }
  const std::size_t nt = t.size();
  const double lns = std::log(p.s);

  if (p.n == 1) {
    cd acc{0.0, 0.0};
    for (std::size_t i = 0; i < nt; ++i) {
      const cd lam{0.0, t[i]};
      cd e = specfn::log_gamma(p.a[0] - lam) + (lam - p.a[0]) * lns;
      for (double bi : p.b) {
        e += specfn::log_gamma(bi + lam) - specfn::log_gamma(cd{bi + p.a[0], 0.0});
      }
      acc += wt[i] * std::exp(e);
    }
    return real_with_imag_check(acc / (2.0 * kPi), "sklyanin_lt");
  }

  // n == 2: two-variable integral with the pairwise density written via
  // 1/(Gamma(z) Gamma(-z)) = -z sin(pi z)/pi at z = lam1 - lam2.
  std::vector<cd> col(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    const cd lam{0.0, t[i]};
    col[i] = specfn::log_gamma(p.a[0] - lam) + specfn::log_gamma(p.a[1] - lam);
  }
  std::vector<cd> per0(nt), per1(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    const cd lam{0.0, t[i]};
    cd e0 = (lam - p.a[0]) * lns;
    cd e1 = (lam - p.a[1]) * lns;
    for (double bi : p.b) {
      const cd lg = specfn::log_gamma(bi + lam);
      e0 += lg - specfn::log_gamma(cd{bi + p.a[0], 0.0});
      e1 += lg - specfn::log_gamma(cd{bi + p.a[1], 0.0});
    }
    per0[i] = e0;
    per1[i] = e1;
  }
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const double x = t[i] - t[j];
      const double dens = x * std::sinh(kPi * x) / kPi;
      if (dens == 0.0) continue;
      const cd e = col[i] + col[j] + per0[i] + per1[j];
      acc += wt[i] * wt[j] * dens * std::exp(e);
    }
  }
  return real_with_imag_check(acc / (4.0 * kPi * kPi * 2.0), "sklyanin_lt");
}

cd kernel_prelimit(cd v1, cd v2, const asymptotics::Constants& k, int n,
                   double r, const contour::QuadratureRule& w_rule) {
  const double n13 = std::cbrt(static_cast<double>(n));
  // recenter both exponents at the saddle; the shift cancels between the
  // v and w factors but keeps each within double range for large n
  const cd s0 = n_times_h(cd{k.z_star, 0.0}, k, n) + r * n13 * k.z_star;
  const cd ev = std::exp(n_times_h(v1, k, n) + r * n13 * v1 - s0);
  cd acc{0.0, 0.0};
  for (std::size_t q = 0; q < w_rule.nodes.size(); ++q) {
    const cd w = w_rule.nodes[q];
    acc += w_rule.weights[q] / (w - v2) * sine_factor(v1, w) *
           std::exp(s0 - n_times_h(w, k, n) - r * n13 * w);
  }
  return ev * acc / kTwoPiI;
}

double det_prelimit(const asymptotics::Constants& k, int n, double r,
                    int order) {
  if (n < 1) throw std::invalid_argument("det_prelimit: n must be positive");
  if (order < 4) throw std::invalid_argument("det_prelimit: order too small");
  const auto vr = contour::quadrature(contour::steepest_v(k, n), order);
  const auto wr = contour::quadrature(contour::steepest_w(k, n), order);
  const double n13 = std::cbrt(static_cast<double>(n));

  // recenter both exponents at the saddle; the shift cancels in every
  // kernel entry but keeps each factor within double range for large n
  const cd s0 = n_times_h(cd{k.z_star, 0.0}, k, n) + r * n13 * k.z_star;
  std::vector<cd> Qv(vr.nodes.size()), Pw(wr.nodes.size());
  for (std::size_t i = 0; i < vr.nodes.size(); ++i) {
    Qv[i] =
        std::exp(n_times_h(vr.nodes[i], k, n) + r * n13 * vr.nodes[i] - s0);
  }
  for (std::size_t q = 0; q < wr.nodes.size(); ++q) {
    Pw[q] = wr.weights[q] *
            std::exp(s0 - n_times_h(wr.nodes[q], k, n) -
                     r * n13 * wr.nodes[q]) /
            kTwoPiI;
  }
  return assemble_det(vr, wr, Qv, Pw, true, "det_prelimit");
}

cd kernel_limit(cd v1, cd v2, double g_bar, double r,
                const contour::QuadratureRule& w_rule) {
  const auto rho = [&](cd z) { return g_bar / 6.0 * z * z * z - r * z; };
  const cd ev = std::exp(-rho(v1));
  cd acc{0.0, 0.0};
  for (std::size_t q = 0; q < w_rule.nodes.size(); ++q) {
    const cd w = w_rule.nodes[q];
    acc += w_rule.weights[q] / ((w - v2) * (v1 - w)) * std::exp(rho(w));
  }
  return ev * acc / kTwoPiI;
}

double det_limit(double g_bar, double r, double truncation, int order) {
  if (!(g_bar > 0.0)) {
    throw std::invalid_argument("det_limit: g_bar must be positive");
  }
  if (order < 4) throw std::invalid_argument("det_limit: order too small");
  // The contour shape adapts to the effective argument of the rescaled
  // cubic, where the saddles sit at +-i sqrt(-x_eff).
  const double x_eff = std::cbrt(2.0 / g_bar) * r;
  const auto vr = contour::quadrature(contour::wedge_v(x_eff, truncation), order);
  const auto wr = contour::quadrature(contour::wedge_w(x_eff, truncation), order);
  const auto rho = [&](cd z) { return g_bar / 6.0 * z * z * z - r * z; };

  std::vector<cd> Qv(vr.nodes.size()), Pw(wr.nodes.size());
  for (std::size_t i = 0; i < vr.nodes.size(); ++i) {
    Qv[i] = std::exp(-rho(vr.nodes[i]));
  }
  for (std::size_t q = 0; q < wr.nodes.size(); ++q) {
    Pw[q] = wr.weights[q] * std::exp(rho(wr.nodes[q])) / kTwoPiI;
  }
  return assemble_det(vr, wr, Qv, Pw, false, "det_limit");
}

}  // namespace gpoly::fredholm
