// polymer_lab: batch driver for the gamma-weight polymer experiments.
//
// Subcommands
//   constants          critical-point table over a (c, gamma) grid
//   verify-identities  exact combinatorial identity suites
//   laplace-check      Monte Carlo vs the three analytic transform routes
//   lln                law-of-large-numbers check for minimal passage costs
//   lue-compare        minimal passage cost vs smallest covariance eigenvalue
//   tw                 fluctuation scaling sweep against the limit law
//   tw-table           table of the limit distribution function
//
// Every run writes one CSV per table plus a JSON run summary into --out.
// Output bytes depend only on the configuration, the seed, and --stamp;
// the thread count never changes results. Exit codes: 0 success, 1 config
// error, 2 numerical failure, 3 validation failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpoly/asymptotics.hpp"
#include "gpoly/contour.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/fredholm.hpp"
#include "gpoly/grsk.hpp"
#include "gpoly/parallel.hpp"
#include "gpoly/polymer.hpp"
#include "gpoly/rmt.hpp"
#include "gpoly/rng.hpp"
#include "gpoly/specfn.hpp"
#include "gpoly/stats.hpp"
#include "gpoly/tracy_widom.hpp"
#include "gpoly/version.hpp"

namespace {

using gpoly::budget_error;
using gpoly::config_error;
using gpoly::numerical_error;
using gpoly::validation_error;
using json = nlohmann::ordered_json;

struct Common {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out = ".";
  bool json_stdout = false;
  std::string stamp;  // filename stamp; defaults to UTC wall time
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "base RNG seed");
  cmd->add_option("--threads", c.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "output directory");
  cmd->add_flag("--json", c.json_stdout, "also print the run summary to stdout");
  cmd->add_option("--stamp", c.stamp,
                  "fixed filename stamp (defaults to UTC time)");
  cmd->add_flag("--timing", c.timing, "include wall time in the summary");
}

std::string default_stamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            const std::vector<std::string>& header)
      : path_(path.string()), out_(path) {
    if (!out_) {
      throw config_error("cannot open output file " + path_.string());
    }
    row_raw(header);
  }

  void row_raw(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

// Shared output plumbing: stamped file names, summary skeleton, final write.
struct Run {
  explicit Run(const Common& c, const std::string& name) : common(c), sub(name) {
    stamp = c.stamp.empty() ? default_stamp() : c.stamp;
    std::filesystem::create_directories(common.out);
    summary["version"] = gpoly::kVersion;
    summary["subcommand"] = sub;
    summary["seed"] = common.seed;
    start = std::chrono::steady_clock::now();
  }

  std::filesystem::path file(const std::string& table,
                             const std::string& ext) const {
    return std::filesystem::path(common.out) / (table + "-" + stamp + "." + ext);
  }

  CsvWriter csv(const std::string& table,
                const std::vector<std::string>& header) {
    CsvWriter w(file(table, "csv"), header);
    // file names only, so the summary bytes do not depend on --out
    outputs.push_back(w.path().filename().string());
    return w;
  }

  int finish(int exit_code) {
    summary["status"] = exit_code == 0 ? "ok" : "failed";
    summary["outputs"] = outputs;
    if (common.timing) {
      const auto dt = std::chrono::steady_clock::now() - start;
      summary["wall_time_seconds"] =
          std::chrono::duration<double>(dt).count();
    }
    const auto path = file(sub, "json");
    std::ofstream js(path);
    if (!js) throw config_error("cannot open output file " + path.string());
    js << summary.dump(2) << '\n';
    if (common.json_stdout) std::cout << summary.dump(2) << '\n';
    return exit_code;
  }

  const Common& common;
  std::string sub;
  std::string stamp;
  json summary;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start;
};

// ---------------------------------------------------------------- constants

int cmd_constants(const Common& common, const std::vector<double>& c_grid,
                  const std::vector<double>& gamma_grid) {
  for (double c : c_grid) {
    if (!(c > 1.0)) throw config_error("constants: each c must exceed 1");
  }
  for (double g : gamma_grid) {
    if (!(g > 0.0)) throw config_error("constants: each gamma must be positive");
  }

  Run run(common, "constants");
  run.summary["config"] = {{"c", c_grid}, {"gamma", gamma_grid}};
  CsvWriter csv = run.csv(
      "constants",
      {"c", "gamma", "z_star", "mu", "g_bar", "z_star_scaled",
       "mu_shift", "g_bar_scaled", "status"});

  int failed = 0;
  for (double c : c_grid) {
    for (double g : gamma_grid) {
      try {
        const auto k = gpoly::asymptotics::critical_constants(c, g);
        const double rc = std::sqrt(c);
        csv.row_raw({fmt(c), fmt(g), fmt(k.z_star), fmt(k.mu), fmt(k.g_bar),
                     fmt(k.z_star * (rc - 1.0) / g),
                     fmt(g * k.mu + (rc - 1.0) * (rc - 1.0)),
                     fmt(g * g * g * k.g_bar), "ok"});
      } catch (const numerical_error&) {
        ++failed;
        csv.row_raw({fmt(c), fmt(g), "", "", "", "", "", "", "failed"});
      }
    }
  }
  run.summary["stats"] = {
      {"rows", c_grid.size() * gamma_grid.size()}, {"failed", failed}};
  return run.finish(failed > 0 ? 3 : 0);
}

// -------------------------------------------------------- verify-identities

struct IdentityCheck {
  std::string name;
  double tolerance = 0.0;
  double max_error = 0.0;
  int samples = 0;
  json offender;
};

json matrix_json(const gpoly::grsk::Matrix& w) {
  return {{"h", w.h}, {"n", w.n}, {"entries", w.w}};
}

json instance_json(const gpoly::polymer::Instance& inst) {
  return {{"m", inst.m}, {"n", inst.n}, {"entries", inst.g}};
}

void track(IdentityCheck& chk, double err, const json& witness) {
  ++chk.samples;
  if (err > chk.max_error) {
    chk.max_error = err;
    if (err > chk.tolerance) chk.offender = witness;
  }
}

int cmd_verify_identities(const Common& common, int budget) {
  if (budget < 1) throw config_error("verify-identities: budget must be positive");

  Run run(common, "verify-identities");
  run.summary["config"] = {{"budget", budget}};

  IdentityCheck partition{"partition_dp_vs_enumeration", 1e-12, 0.0, 0, {}};
  IdentityCheck passage{"passage_dp_vs_enumeration", 1e-12, 0.0, 0, {}};
  IdentityCheck corner{"complement_corner", 1e-10, 0.0, 0, {}};
  IdentityCheck equivariance{"transpose_equivariance", 1e-10, 0.0, 0, {}};
  IdentityCheck mass{"full_tuple_mass", 1e-10, 0.0, 0, {}};

  gpoly::RngStream rng(common.seed);

  const int dp_draws = std::max(1, budget / 2);
  for (int t = 0; t < dp_draws; ++t) {
    const int m = 1 + static_cast<int>(rng.raw() % 6);
    const int n = 1 + static_cast<int>(rng.raw() % 6);
    const auto inst = gpoly::polymer::sample_instance(m, n, 0.7, rng);
    const double dp = gpoly::polymer::partition_log(inst);
    const double brute = gpoly::polymer::brute_force_partition_log(inst);
    track(partition, std::abs(dp - brute) / std::max(1.0, std::abs(brute)),
          instance_json(inst));
    const double fp = gpoly::polymer::fpp_min(inst);
    const double fb = gpoly::polymer::brute_force_fpp(inst);
    track(passage, std::abs(fp - fb) / std::max(1.0, std::abs(fb)),
          instance_json(inst));
  }

  for (int t = 0; t < budget; ++t) {
    const int n = 1 + static_cast<int>(rng.raw() % 3);
    const int h = n + static_cast<int>(rng.raw() % (7 - n));
    gpoly::grsk::Matrix w(h, n);
    for (double& v : w.w) v = gpoly::specfn::gamma_sample(0.8, rng);

    const auto img = gpoly::grsk::grsk_map(w);
    const int m = h - n + 1;
    const double z =
        gpoly::polymer::partition_log(gpoly::grsk::complement_instance(w));
    track(corner,
          std::abs(z + img.at(m - 1, 0)) /
              std::max(1.0, std::abs(img.at(m - 1, 0))),
          matrix_json(w));

    const auto imgt = gpoly::grsk::grsk_map(gpoly::grsk::transpose(w));
    double terr = 0.0;
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < n; ++j) {
        terr = std::max(terr, std::abs(img.at(i, j) - imgt.at(j, i)) /
                                  std::max(1.0, std::abs(img.at(i, j))));
      }
    }
    track(equivariance, terr, matrix_json(w));

    double all = 0.0;
    for (double v : w.w) all += std::log(v);
    track(mass,
          std::abs(gpoly::grsk::tau_log(w, n, n) - all) /
              std::max(1.0, std::abs(all)),
          matrix_json(w));
  }

  CsvWriter csv = run.csv("verify-identities",
                          {"check", "samples", "max_rel_error", "tolerance",
                           "status"});
  json stats = json::array();
  bool ok = true;
  for (const IdentityCheck* chk :
       {&partition, &passage, &corner, &equivariance, &mass}) {
    const bool pass = chk->max_error <= chk->tolerance;
    ok = ok && pass;
    csv.row_raw({chk->name, std::to_string(chk->samples), fmt(chk->max_error),
                 fmt(chk->tolerance), pass ? "ok" : "failed"});
    json item = {{"check", chk->name},
                 {"samples", chk->samples},
                 {"max_rel_error", chk->max_error},
                 {"tolerance", chk->tolerance},
                 {"pass", pass}};
    if (!pass) item["offender"] = chk->offender;
    stats.push_back(std::move(item));
  }
  run.summary["stats"] = std::move(stats);
  return run.finish(ok ? 0 : 3);
}

// ------------------------------------------------------------ laplace-check

int cmd_laplace_check(const Common& common, int n, int h, double gamma,
                      double eps, std::vector<double> s_grid, int replicas) {
  if (n < 1 || h < n) throw config_error("laplace-check: need 1 <= n <= h");
  if (replicas < 2) throw config_error("laplace-check: need >= 2 replicas");
  if (s_grid.empty()) throw config_error("laplace-check: empty s grid");
  std::sort(s_grid.begin(), s_grid.end());

  gpoly::fredholm::Params p;
  p.n = n;
  p.h = h;
  for (int j = 1; j <= n; ++j) p.a.push_back(eps * j);
  for (int i = 1; i <= h; ++i) p.b.push_back(gamma - eps * i);
  const double b_min = *std::min_element(p.b.begin(), p.b.end());
  if (!(b_min > 0.0)) {
    throw config_error("laplace-check: gamma - eps*h must stay positive");
  }
  p.delta2 = 0.6 * b_min;
  const double cap = std::min(p.delta2, 1.0 - p.delta2);
  const double a_max = std::abs(p.a.back());
  p.delta1 = (a_max < 0.5 * cap) ? 0.5 * cap : 0.5 * (a_max + cap);
  try {
    gpoly::fredholm::validate(p);
  } catch (const validation_error& e) {
    throw config_error(std::string("laplace-check: inadmissible parameters: ") +
                       e.what());
  }

  Run run(common, "laplace-check");
  run.summary["config"] = {{"n", n},         {"h", h},
                           {"gamma", gamma}, {"eps", eps},
                           {"s", s_grid},    {"replicas", replicas}};
  run.summary["derived"] = {{"a", p.a},
                            {"b", p.b},
                            {"delta1", p.delta1},
                            {"delta2", p.delta2}};

  const auto mc = gpoly::stats::mc_laplace(n, h, p.a, p.b, s_grid, replicas,
                                           common.seed, common.threads);

  CsvWriter csv = run.csv("laplace-check",
                          {"s", "mc_mean", "mc_se", "det_nystrom",
                           "det_matrix", "det_direct", "route_gap",
                           "inside_3se"});
  json rows = json::array();
  double worst_gap = 0.0;
  bool all_inside = true;
  for (std::size_t k = 0; k < s_grid.size(); ++k) {
    gpoly::fredholm::Params ps = p;
    ps.s = s_grid[k];
    const double d_ny = gpoly::fredholm::det_finite_lt(ps);
    const double d_mx = gpoly::fredholm::det_matrix_formula(ps);
    std::vector<double> dets{d_ny, d_mx};
    std::string direct_cell;
    if (n <= 2) {
      dets.push_back(gpoly::fredholm::sklyanin_lt(ps));
      direct_cell = fmt(dets.back());
    }
    double gap = 0.0;
    bool inside = true;
    for (double d : dets) {
      for (double e : dets) gap = std::max(gap, std::abs(d - e));
      inside = inside && std::abs(d - mc[k].mean) <= 3.0 * mc[k].se;
    }
    worst_gap = std::max(worst_gap, gap);
    all_inside = all_inside && inside;
    csv.row_raw({fmt(s_grid[k]), fmt(mc[k].mean), fmt(mc[k].se), fmt(d_ny),
                 fmt(d_mx), direct_cell, fmt(gap), inside ? "yes" : "no"});
    json row = {{"s", s_grid[k]},       {"mc_mean", mc[k].mean},
                {"mc_se", mc[k].se},    {"det_nystrom", d_ny},
                {"det_matrix", d_mx},   {"route_gap", gap},
                {"inside_3se", inside}};
    if (n <= 2) row["det_direct"] = dets.back();
    rows.push_back(std::move(row));
  }
  run.summary["stats"] = {{"rows", std::move(rows)},
                          {"worst_route_gap", worst_gap},
                          {"all_inside_3se", all_inside}};
  return run.finish(0);
}

// --------------------------------------------------------------------- lln

int cmd_lln(const Common& common, double alpha, const std::vector<int>& n_list,
            int replicas) {
  if (!(alpha > 0.0)) throw config_error("lln: alpha must be positive");
  if (replicas < 2) throw config_error("lln: need >= 2 replicas");
  for (int n : n_list) {
    if (n < 1) throw config_error("lln: each n must be positive");
  }

  Run run(common, "lln");
  run.summary["config"] = {
      {"alpha", alpha}, {"n", n_list}, {"replicas", replicas}};
  const double target = std::pow(std::sqrt(1.0 + alpha) - 1.0, 2);

  CsvWriter csv = run.csv(
      "lln", {"n", "m", "replicas", "mean_f_over_n", "se", "target",
              "rel_gap"});
  json rows = json::array();
  for (int n : n_list) {
    const int m = static_cast<int>(std::ceil(alpha * n - 1e-9));
    std::vector<double> vals(replicas);
    gpoly::parallel_for(replicas, common.threads, [&](std::int64_t r) {
      auto rng = gpoly::RngStream::for_replica(
          common.seed, static_cast<std::uint64_t>(r),
          static_cast<std::uint64_t>(n));
      vals[r] =
          gpoly::polymer::fpp_min(gpoly::polymer::sample_exponential(m, n, rng)) /
          n;
    });
    const double mean = gpoly::stats::pairwise_sum(vals) / replicas;
    std::vector<double> sq(replicas);
    for (int r = 0; r < replicas; ++r) {
      sq[r] = (vals[r] - mean) * (vals[r] - mean);
    }
    const double se = std::sqrt(gpoly::stats::pairwise_sum(sq) /
                                (static_cast<double>(replicas) - 1.0) /
                                replicas);
    const double rel = std::abs(mean - target) / target;
    csv.row_raw({std::to_string(n), std::to_string(m),
                 std::to_string(replicas), fmt(mean), fmt(se), fmt(target),
                 fmt(rel)});
    rows.push_back({{"n", n},
                    {"m", m},
                    {"mean_f_over_n", mean},
                    {"se", se},
                    {"target", target},
                    {"rel_gap", rel}});
  }
  run.summary["stats"] = {{"rows", std::move(rows)}};
  return run.finish(0);
}

// ------------------------------------------------------------- lue-compare

int cmd_lue_compare(const Common& common, int m, int n, int replicas) {
  if (m < 1 || n < 1) throw config_error("lue-compare: m, n must be positive");
  if (m + n - 1 > 12) {
    throw config_error("lue-compare: m + n - 1 must stay at or below 12");
  }
  if (replicas < 2) throw config_error("lue-compare: need >= 2 replicas");

  Run run(common, "lue-compare");
  run.summary["config"] = {{"m", m}, {"n", n}, {"replicas", replicas}};

  std::vector<double> passage(replicas), eigen(replicas);
  gpoly::parallel_for(replicas, common.threads, [&](std::int64_t r) {
    auto rng1 = gpoly::RngStream::for_replica(common.seed,
                                              static_cast<std::uint64_t>(r), 1);
    passage[r] =
        gpoly::polymer::fpp_min(gpoly::polymer::sample_exponential(m, n, rng1));
    auto rng2 = gpoly::RngStream::for_replica(common.seed,
                                              static_cast<std::uint64_t>(r), 2);
    eigen[r] = gpoly::rmt::wishart_min_eig(n, m + n - 1, rng2);
  });

  const double d = gpoly::stats::ks_two_sample(
      gpoly::stats::make_sample(std::move(passage), common.seed, 1),
      gpoly::stats::make_sample(std::move(eigen), common.seed, 2));
  const double crit = gpoly::stats::ks_two_sample_critical(
      static_cast<std::size_t>(replicas), static_cast<std::size_t>(replicas),
      0.01);
  const bool reject = d > crit;

  CsvWriter csv = run.csv("lue-compare", {"m", "n", "replicas", "ks_distance",
                                          "critical_1pct", "null_rejected"});
  csv.row_raw({std::to_string(m), std::to_string(n), std::to_string(replicas),
               fmt(d), fmt(crit), reject ? "yes" : "no"});
  run.summary["stats"] = {{"ks_distance", d},
                          {"critical_1pct", crit},
                          {"null_rejected", reject}};
  return run.finish(0);
}

// ---------------------------------------------------------------------- tw

int cmd_tw(const Common& common, double alpha, double gamma,
           const std::vector<int>& n_list, int replicas, double r_min,
           double r_max, double r_step) {
  if (!(alpha > 0.0)) throw config_error("tw: alpha must be positive");
  if (!(gamma > 0.0)) throw config_error("tw: gamma must be positive");
  if (replicas < 2) throw config_error("tw: need >= 2 replicas");
  if (!(r_step > 0.0) || !(r_min <= r_max)) {
    throw config_error("tw: bad reference grid");
  }
  for (int n : n_list) {
    if (n < 2) throw config_error("tw: each n must be at least 2");
  }

  Run run(common, "tw");
  run.summary["config"] = {{"alpha", alpha},   {"gamma", gamma},
                           {"n", n_list},      {"replicas", replicas},
                           {"r_min", r_min},   {"r_max", r_max},
                           {"r_step", r_step}};

  CsvWriter ks_csv = run.csv(
      "tw", {"n", "scale_label", "scale_value", "ks_distance", "is_best"});
  CsvWriter ecdf_csv = run.csv("tw-ecdf", {"n", "x", "ecdf"});

  const std::vector<std::string> labels{"cuberoot", "inv_cuberoot", "cube"};
  json per_n = json::array();
  std::string winner_common;
  bool winner_consistent = true;
  // the sweep's verdict is the best scale at the largest n; smaller sizes
  // can disagree when the candidate scales nearly coincide
  int n_max_seen = 0;
  std::string winner_at_max;

  for (int n : n_list) {
    const int m = static_cast<int>(std::ceil(alpha * n - 1e-9));
    const double c_eff = static_cast<double>(m + n - 1) / n;
    gpoly::asymptotics::Constants k;
    try {
      k = gpoly::asymptotics::critical_constants(c_eff, gamma);
    } catch (const numerical_error& e) {
      run.summary["error"] = std::string("constants failed at n = ") +
                             std::to_string(n) + ": " + e.what();
      return run.finish(3);
    }

    std::vector<double> x(replicas);
    const double n13 = std::cbrt(static_cast<double>(n));
    gpoly::parallel_for(replicas, common.threads, [&](std::int64_t r) {
      auto rng = gpoly::RngStream::for_replica(
          common.seed, static_cast<std::uint64_t>(r),
          static_cast<std::uint64_t>(n));
      const auto inst = gpoly::polymer::sample_instance(m, n, gamma, rng);
      x[r] = (gpoly::polymer::partition_log(inst) - n * k.mu) / n13;
    });

    const double base = 0.5 * k.g_bar;
    const std::vector<double> scales{std::cbrt(base), 1.0 / std::cbrt(base),
                                     base * base * base};
    std::vector<double> ks(scales.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
      std::vector<double> scaled(x);
      for (double& v : scaled) v *= scales[i];
      ks[i] = gpoly::stats::ks_one_sample(
          gpoly::stats::make_sample(std::move(scaled), common.seed,
                                    static_cast<std::uint64_t>(n)),
          gpoly::tw::tracy_widom_cdf_clamped);
      if (ks[i] < ks[best]) best = i;
    }
    for (std::size_t i = 0; i < scales.size(); ++i) {
      ks_csv.row_raw({std::to_string(n), labels[i], fmt(scales[i]),
                      fmt(ks[i]), i == best ? "yes" : "no"});
    }

    std::vector<double> winner_sample(x);
    for (double& v : winner_sample) v *= scales[best];
    std::sort(winner_sample.begin(), winner_sample.end());
    for (int r = 0; r < replicas; ++r) {
      ecdf_csv.row_raw({std::to_string(n), fmt(winner_sample[r]),
                        fmt(static_cast<double>(r + 1) / replicas)});
    }

    // largest ECDF deviation from the limit law on the reference grid
    double grid_dev = 0.0;
    for (double rr = r_min; rr <= r_max + 1e-12; rr += r_step) {
      const auto it = std::upper_bound(winner_sample.begin(),
                                       winner_sample.end(), rr);
      const double emp =
          static_cast<double>(it - winner_sample.begin()) / replicas;
      grid_dev = std::max(
          grid_dev, std::abs(emp - gpoly::tw::tracy_widom_cdf_clamped(rr)));
    }

    if (winner_common.empty()) {
      winner_common = labels[best];
    } else if (winner_common != labels[best]) {
      winner_consistent = false;
    }
    if (n > n_max_seen) {
      n_max_seen = n;
      winner_at_max = labels[best];
    }
    per_n.push_back({{"n", n},
                     {"m", m},
                     {"c_eff", c_eff},
                     {"z_star", k.z_star},
                     {"mu", k.mu},
                     {"g_bar", k.g_bar},
                     {"ks", {{labels[0], ks[0]},
                             {labels[1], ks[1]},
                             {labels[2], ks[2]}}},
                     {"best_scale", labels[best]},
                     {"best_ks", ks[best]},
                     {"grid_deviation", grid_dev}});
  }

  run.summary["stats"] = {
      {"per_n", std::move(per_n)},
      {"winner", winner_at_max},
      {"winner_consistent", winner_consistent},
      {"derived_candidate", "inv_cuberoot"},
      {"winner_matches_derived", winner_at_max == "inv_cuberoot"}};
  return run.finish(0);
}

// ---------------------------------------------------------------- tw-table

int cmd_tw_table(const Common& common, double r_min, double r_max,
                 double r_step, double truncation, int order) {
  if (!(r_step > 0.0) || !(r_min <= r_max)) {
    throw config_error("tw-table: bad grid");
  }
  if (r_min < -15.0 || r_max > 10.0) {
    throw config_error("tw-table: grid must stay within [-15, 10]");
  }
  const bool direct = truncation > 0.0 || order > 0;
  if (direct && (!(truncation > 0.0) || order < 4)) {
    throw config_error("tw-table: direct mode needs truncation > 0, order >= 4");
  }

  Run run(common, "tw-table");
  run.summary["config"] = {{"r_min", r_min},       {"r_max", r_max},
                           {"r_step", r_step},     {"truncation", truncation},
                           {"order", order},       {"mode", direct ? "direct" : "spline"}};

  std::vector<double> grid;
  for (double r = r_min; r <= r_max + 1e-12; r += r_step) grid.push_back(r);
  std::vector<double> f(grid.size());
  gpoly::parallel_for(static_cast<std::int64_t>(grid.size()), common.threads,
                      [&](std::int64_t i) {
                        f[i] = direct ? gpoly::tw::tracy_widom_point(
                                            grid[i], truncation, order)
                                      : gpoly::tw::tracy_widom_cdf(grid[i]);
                      });

  CsvWriter csv = run.csv("tw-table", {"r", "f_gue"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.row_raw({fmt(grid[i]), fmt(f[i])});
  }
  run.summary["stats"] = {{"rows", grid.size()},
                          {"first", f.front()},
                          {"last", f.back()}};
  return run.finish(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"batch experiments for the gamma-weight random polymer"};
  app.require_subcommand(1);

  Common common;
  std::function<int()> runner;

  {
    auto* cmd = app.add_subcommand("constants",
                                   "critical-point table over a (c, gamma) grid");
    auto c_grid = std::make_shared<std::vector<double>>(
        std::vector<double>{2.0, 4.0});
    auto g_grid = std::make_shared<std::vector<double>>(
        std::vector<double>{0.1, 0.01, 0.001});
    cmd->add_option("--c", *c_grid, "aspect ratios (> 1)")->delimiter(',');
    cmd->add_option("--gamma", *g_grid, "shape parameters (> 0)")
        ->delimiter(',');
    add_common(cmd, common);
    cmd->callback([&runner, &common, c_grid, g_grid] {
      runner = [&common, c_grid, g_grid] {
        return cmd_constants(common, *c_grid, *g_grid);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("verify-identities",
                                   "exact combinatorial identity suites");
    auto budget = std::make_shared<int>(200);
    cmd->add_option("--budget", *budget, "random matrices per suite")
        ->check(CLI::PositiveNumber);
    add_common(cmd, common);
    cmd->callback([&runner, &common, budget] {
      runner = [&common, budget] {
        return cmd_verify_identities(common, *budget);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "laplace-check", "Monte Carlo vs analytic transform routes");
    auto n = std::make_shared<int>(2);
    auto h = std::make_shared<int>(3);
    auto gamma = std::make_shared<double>(0.5);
    auto eps = std::make_shared<double>(0.01);
    auto s = std::make_shared<std::vector<double>>(
        std::vector<double>{0.5, 1.0, 2.0});
    auto replicas = std::make_shared<int>(100000);
    cmd->add_option("--n", *n, "columns");
    cmd->add_option("--rows", *h, "row parameter h = m + n - 1 (>= n)");
    cmd->add_option("--gamma", *gamma, "shape parameter");
    cmd->add_option("--eps", *eps, "inhomogeneity step");
    cmd->add_option("--s", *s, "transform arguments")->delimiter(',');
    cmd->add_option("--replicas", *replicas, "Monte Carlo replicas");
    add_common(cmd, common);
    cmd->callback([&runner, &common, n, h, gamma, eps, s, replicas] {
      runner = [&common, n, h, gamma, eps, s, replicas] {
        return cmd_laplace_check(common, *n, *h, *gamma, *eps, *s, *replicas);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "lln", "law of large numbers for minimal passage costs");
    auto alpha = std::make_shared<double>(2.0);
    auto n_list = std::make_shared<std::vector<int>>(
        std::vector<int>{250, 500, 1000});
    auto replicas = std::make_shared<int>(100);
    cmd->add_option("--alpha", *alpha, "row/column ratio");
    cmd->add_option("--n", *n_list, "column counts")->delimiter(',');
    cmd->add_option("--replicas", *replicas, "replicas per n");
    add_common(cmd, common);
    cmd->callback([&runner, &common, alpha, n_list, replicas] {
      runner = [&common, alpha, n_list, replicas] {
        return cmd_lln(common, *alpha, *n_list, *replicas);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "lue-compare",
        "minimal passage cost vs smallest covariance eigenvalue");
    auto m = std::make_shared<int>(3);
    auto n = std::make_shared<int>(3);
    auto replicas = std::make_shared<int>(100000);
    cmd->add_option("--m", *m, "rows");
    cmd->add_option("--n", *n, "columns");
    cmd->add_option("--replicas", *replicas, "draws per sample");
    add_common(cmd, common);
    cmd->callback([&runner, &common, m, n, replicas] {
      runner = [&common, m, n, replicas] {
        return cmd_lue_compare(common, *m, *n, *replicas);
      };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "tw", "fluctuation scaling sweep against the limit law");
    auto alpha = std::make_shared<double>(1.0);
    auto gamma = std::make_shared<double>(0.2);
    auto n_list = std::make_shared<std::vector<int>>(
        std::vector<int>{50, 100, 200});
    auto replicas = std::make_shared<int>(10000);
    auto r_min = std::make_shared<double>(-5.0);
    auto r_max = std::make_shared<double>(3.0);
    auto r_step = std::make_shared<double>(0.5);
    cmd->add_option("--alpha", *alpha, "row/column ratio");
    cmd->add_option("--gamma", *gamma, "shape parameter");
    cmd->add_option("--n", *n_list, "column counts")->delimiter(',');
    cmd->add_option("--replicas", *replicas, "replicas per n");
    cmd->add_option("--r-min", *r_min, "reference grid start");
    cmd->add_option("--r-max", *r_max, "reference grid end");
    cmd->add_option("--r-step", *r_step, "reference grid step");
    add_common(cmd, common);
    cmd->callback([&runner, &common, alpha, gamma, n_list, replicas, r_min,
                   r_max, r_step] {
      runner = [&common, alpha, gamma, n_list, replicas, r_min, r_max,
                r_step] {
        return cmd_tw(common, *alpha, *gamma, *n_list, *replicas, *r_min,
                      *r_max, *r_step);
      };
    });
  }
  {
    auto* cmd =
        app.add_subcommand("tw-table", "table of the limit distribution");
    auto r_min = std::make_shared<double>(-10.0);
    auto r_max = std::make_shared<double>(6.0);
    auto r_step = std::make_shared<double>(0.25);
    auto truncation = std::make_shared<double>(0.0);
    auto order = std::make_shared<int>(0);
    cmd->add_option("--r-min", *r_min, "grid start (>= -15)");
    cmd->add_option("--r-max", *r_max, "grid end (<= 10)");
    cmd->add_option("--r-step", *r_step, "grid step");
    cmd->add_option("--truncation", *truncation,
                    "contour truncation for direct evaluation (0 = spline)");
    cmd->add_option("--order", *order,
                    "quadrature order for direct evaluation (0 = spline)");
    add_common(cmd, common);
    cmd->callback([&runner, &common, r_min, r_max, r_step, truncation, order] {
      runner = [&common, r_min, r_max, r_step, truncation, order] {
        return cmd_tw_table(common, *r_min, *r_max, *r_step, *truncation,
                            *order);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return runner();
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "validation failure: " << e.what() << '\n';
    return 3;
  }
}
