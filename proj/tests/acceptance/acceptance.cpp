// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails.
//
//   hopest_acceptance                 run all nine
//   hopest_acceptance --criterion 5   run one

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hopest/analysis.hpp"
#include "hopest/ensemble.hpp"
#include "hopest/estimation.hpp"
#include "hopest/graph.hpp"
#include "hopest/hopest.h"
#include "hopest/model.hpp"
#include "hopest/spectral.hpp"

namespace {

using namespace hopest;

// ---- pinned tolerances -----------------------------------------------------

constexpr double kRoundTripTolerance = 1e-8;        // criterion 1
constexpr double kFirstMomentTolerance = 1e-10;     // criterion 2
constexpr double kFirstErrorRatioTolerance = 1e-8;  // criterion 2
constexpr double kSecondOrderDecay = 1.0 / 3.0;     // criterion 3
constexpr double kSlopeLow = 0.95, kSlopeHigh = 1.05;  // criterion 4
constexpr double kAnsatzExponent = 7.0 / 6.0;       // criterion 5
constexpr double kTrendSlack = 0.5;                 // criterion 6
constexpr double kTrendDrop = 5.0;                  // criterion 6
constexpr double kOneSidedZ95 = 1.6448536269514722; // criterion 7
constexpr std::size_t kBootstrapReps = 4000;        // criterion 7
constexpr double kSolverTolerance = 1e-10;          // criterion 9
constexpr double kThreshold = 0.122;
constexpr double kLow = 0.95, kHigh = 1.05;

struct Verdict {
  bool pass = true;
  std::string detail;
};

unsigned workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// Full-precision first coupling from a reconstruction.
long double coupling(const ReconstructionResult& r, std::size_t n) {
  return static_cast<long double>(r.estimated[n - 1]) + r.estimated_tail[n - 1];
}

ReconstructionResult reconstruct(const ChainSpec& chain,
                                 const PerturbationSpec& pert) {
  auto r = reconstruct_nearest_neighbor(
      eigendecompose(build_perturbed_hamiltonian(chain, pert)),
      chain.n_sites() - 1);
  attach_errors(r, chain.nearest());
  return r;
}

std::vector<double> nnn_weights(const PerturbationSpec& p) {
  std::vector<double> d;
  for (const Edge& e : p.edges()) d.push_back(e.weight);
  return d;
}

// ---- criteria ----------------------------------------------------------------

// Round trip at eps = 0 recovers every coupling and L_C = N.
Verdict exactness_at_zero() {
  const std::size_t sizes[] = {5, 10, 20, 30, 40};
  double worst = 0;
  std::size_t wrong_lc = 0, count = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = sizes[i % 5];
    const ChainSpec chain =
        sample_chain(derive_instance_rng(101, i, 0).fork(1), n, kLow, kHigh);
    const auto r = reconstruct(chain, {});
    if (r.estimated.size() != n - 1) {
      worst = INFINITY;
      continue;
    }
    for (std::size_t k = 0; k < n - 1; ++k)
      worst = std::max(worst, std::fabs(r.estimated[k] - chain.nearest()[k]));
    if (critical_length(r.errors_delta, n, kThreshold) != n) ++wrong_lc;
    ++count;
  }
  return {worst <= kRoundTripTolerance && wrong_lc == 0 && count == 200,
          "max |c_est - c| = " + num(worst) + " (tol " +
              num(kRoundTripTolerance) + "), L_C != N in " +
              std::to_string(wrong_lc) + "/200"};
}

// (c1^eps)^2 = c1^2 + eps^2 d1^2 exactly, so Delta_1 = eps d1.
Verdict first_coupling_identity() {
  double worst_moment = 0, worst_ratio = 0;
  for (double eps : {1e-2, 1e-4}) {
    for (std::size_t i = 0; i < 200; ++i) {
      const Instance inst = sample_instance(derive_instance_rng(202, i, 0), 10,
                                            kLow, kHigh, eps,
                                            topology::NextNearest{});
      const auto r = reconstruct(inst.chain, inst.perturbation);
      const long double c1 = inst.chain.nearest()[0];
      const long double d1 = inst.perturbation.edges()[0].weight;
      const long double c1e = coupling(r, 1);
      const long double e = eps;
      worst_moment = std::max(
          worst_moment,
          static_cast<double>(std::fabs(c1e * c1e - c1 * c1 - e * e * d1 * d1)));
      worst_ratio = std::max(
          worst_ratio,
          std::fabs(r.errors_delta[0] / (eps * static_cast<double>(d1)) - 1.0));
    }
  }
  return {worst_moment < kFirstMomentTolerance &&
              worst_ratio <= kFirstErrorRatioTolerance,
          "max moment residual " + num(worst_moment) + " (tol " +
              num(kFirstMomentTolerance) + "), max |Delta_1/(eps d1) - 1| " +
              num(worst_ratio) + " (tol " + num(kFirstErrorRatioTolerance) + ")"};
}

// |Delta_2 - eps (d2 + d1 c3 / c1)| decays faster than quadratically.
Verdict second_order_law() {
  const double grid[] = {1e-2, 5e-3, 2.5e-3};
  double worst = 0;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const RandomStream rng = derive_instance_rng(303, i, 0);
    const ChainSpec chain = sample_chain(rng.fork(1), 8, kLow, kHigh);
    const std::vector<double> d =
        nnn_weights(sample_nnn(rng.fork(2), 8, kLow, kHigh, 1.0));
    const auto& c = chain.nearest();
    double residual[3];
    for (int g = 0; g < 3; ++g) {
      const double eps = grid[g];
      const auto r = reconstruct(chain, nnn_perturbation(d, eps));
      residual[g] = std::fabs(r.errors_delta[1] - eps * (d[1] + d[0] * c[2] / c[0]));
    }
    for (int g = 0; g < 2; ++g) {
      const double ratio = residual[g + 1] / residual[g];
      worst = std::max(worst, ratio);
      if (!(ratio <= kSecondOrderDecay)) ++violations;
    }
  }
  return {violations == 0, "worst R(eps/2)/R(eps) = " + num(worst) +
                               " (limit " + num(kSecondOrderDecay) + "), " +
                               std::to_string(violations) + "/100 violations"};
}

// log Delta_n against log eps has slope 1.
Verdict linear_scaling() {
  const double grid[] = {1e-6, 1e-5, 1e-4, 1e-3};
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < 20; ++i) {
    const RandomStream rng = derive_instance_rng(404, i, 0);
    const ChainSpec chain = sample_chain(rng.fork(1), 15, kLow, kHigh);
    const std::vector<double> d =
        nnn_weights(sample_nnn(rng.fork(2), 15, kLow, kHigh, 1.0));
    std::vector<std::vector<double>> deltas;
    for (double eps : grid)
      deltas.push_back(reconstruct(chain, nnn_perturbation(d, eps)).errors_delta);
    for (std::size_t n = 0; n < 10; ++n) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t g = 0; g < 4; ++g) {
        const double x = std::log(grid[g]), y = std::log(deltas[g][n]);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
      }
      const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
      lo = std::min(lo, slope);
      hi = std::max(hi, slope);
    }
  }
  return {lo >= kSlopeLow && hi <= kSlopeHigh,
          "slopes in [" + num(lo) + ", " + num(hi) + "] (required [" +
              num(kSlopeLow) + ", " + num(kSlopeHigh) + "])"};
}

// Ensemble-mean Delta_n under n^(7/6) eps max(d).
Verdict ansatz_bound_holds() {
  EnsembleConfig cfg;
  cfg.master_seed = 505;
  cfg.instances = 1000;
  cfg.n_sites = 30;
  cfg.epsilon_grid = {1e-4};
  const auto outcomes = simulate(cfg, cfg.topology, 0, 1e-4, workers());
  // max(d_k) taken as the sampling ceiling, the most lenient reading
  const auto profile = aggregate_profile(outcomes, cfg, 1e-4, kAnsatzExponent);
  std::string failing;
  double worst = 0;
  for (const auto& row : profile) {
    const double ratio = row.mean_delta / row.bound;
    worst = std::max(worst, ratio);
    if (!(row.mean_delta <= row.bound))
      failing += (failing.empty() ? "" : ",") + std::to_string(row.site);
  }
  return {failing.empty(),
          "max mean/bound = " + num(worst) +
              (failing.empty() ? std::string() : ", exceeded at n = " + failing)};
}

std::vector<double> trend_grid() { return log_spaced(1e-5, 1e-1, 9); }

// Mean L_C falls with eps.
Verdict critical_length_trend() {
  std::string detail;
  bool pass = true;
  for (std::size_t n : {20u, 30u, 40u}) {
    EnsembleConfig cfg;
    cfg.master_seed = 606;
    cfg.instances = 300;
    cfg.n_sites = n;
    cfg.epsilon_grid = trend_grid();
    const auto rows = critical_length_sweep(cfg, kThreshold, workers());
    double worst_rise = -INFINITY;
    for (std::size_t i = 1; i < rows.size(); ++i)
      worst_rise = std::max(worst_rise, rows[i].mean_lc - rows[i - 1].mean_lc);
    const double drop = rows.front().mean_lc - rows.back().mean_lc;
    pass = pass && worst_rise <= kTrendSlack && drop >= kTrendDrop;
    detail += "N=" + std::to_string(n) + ": L_C " + num(rows.front().mean_lc) +
              " -> " + num(rows.back().mean_lc) + ", max rise " +
              num(worst_rise) + "; ";
  }
  detail += "slack " + num(kTrendSlack) + ", min drop " + num(kTrendDrop);
  return {pass, detail};
}

double site_average(const std::vector<ErrorProfile>& rows,
                    double ErrorProfile::*field) {
  double s = 0;
  for (const auto& r : rows) s += r.*field;
  return s / static_cast<double>(rows.size());
}

// NNN beats random 18-edge topologies on both mean and spread.
Verdict topology_ordering() {
  EnsembleConfig cfg;
  cfg.master_seed = 707;
  cfg.instances = 200;
  cfg.n_sites = 20;
  cfg.epsilon_grid = {1e-4};
  const double eps = 1e-4;
  const auto nnn = simulate(cfg, topology::NextNearest{}, 0, eps, workers());
  const auto rnd = simulate(cfg, topology::RandomEdges{18}, 0, eps, workers());
  for (const auto* set : {&nnn, &rnd})
    for (const auto& o : *set)
      if (o.failure || o.deltas.size() != 19)
        return {false, "an instance failed or broke down"};

  // mean: paired one-sided z-test on per-instance site-averaged differences
  std::vector<double> diff(cfg.instances), base(cfg.instances);
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    double a = 0, b = 0;
    for (std::size_t n = 0; n < 19; ++n) a += nnn[i].deltas[n], b += rnd[i].deltas[n];
    base[i] = a / 19.0;
    diff[i] = (b - a) / 19.0;
  }
  const auto [mean_diff, sd_diff] = mean_and_std(diff);
  const double mean_nnn = mean_and_std(base).first;
  const double z = mean_diff / (sd_diff / std::sqrt(static_cast<double>(diff.size())));

  // spread: site-averaged standard deviation, paired bootstrap over instances
  auto spread_gap = [&](const std::vector<std::size_t>& pick) {
    std::vector<InstanceOutcome> a, b;
    for (std::size_t i : pick) a.push_back(nnn[i]), b.push_back(rnd[i]);
    return site_average(aggregate_profile(b, cfg, eps), &ErrorProfile::std_delta) -
           site_average(aggregate_profile(a, cfg, eps), &ErrorProfile::std_delta);
  };
  std::vector<std::size_t> all(cfg.instances);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const double gap = spread_gap(all);
  std::mt19937_64 gen(7070);
  std::uniform_int_distribution<std::size_t> pick(0, cfg.instances - 1);
  std::vector<double> boot(kBootstrapReps);
  std::vector<std::size_t> sample(cfg.instances);
  for (double& g : boot) {
    for (std::size_t& s : sample) s = pick(gen);
    g = spread_gap(sample);
  }
  std::sort(boot.begin(), boot.end());
  const double lower = boot[static_cast<std::size_t>(0.05 * kBootstrapReps)];

  return {z > kOneSidedZ95 && lower > 0.0,
          "mean nnn " + num(mean_nnn) + " vs random " + num(mean_nnn + mean_diff) +
              " (z = " + num(z) + " > " + num(kOneSidedZ95) +
              "), std gap " + num(gap) + " with 5% bootstrap bound " + num(lower)};
}

// Random topologies give critical lengths no longer than NNN.
Verdict critical_length_ordering() {
  std::string detail;
  bool pass = true;
  double worst = -INFINITY;
  for (std::size_t n : {20u, 30u, 40u}) {
    EnsembleConfig cfg;
    cfg.master_seed = 808;
    cfg.instances = 200;
    cfg.n_sites = n;
    cfg.epsilon_grid = trend_grid();
    for (std::size_t g = 0; g < cfg.epsilon_grid.size(); ++g) {
      const double eps = cfg.epsilon_grid[g];
      if (eps < 1e-4 * (1 - 1e-12)) continue;
      const auto a = simulate(cfg, topology::NextNearest{}, g, eps, workers());
      const auto b = simulate(cfg, topology::RandomEdges{n - 2}, g, eps, workers());
      std::vector<double> diff;
      for (std::size_t i = 0; i < cfg.instances; ++i) {
        if (a[i].failure || b[i].failure) continue;
        diff.push_back(static_cast<double>(critical_length(b[i].deltas, n, kThreshold)) -
                       static_cast<double>(critical_length(a[i].deltas, n, kThreshold)));
      }
      const auto [m, sd] = mean_and_std(diff);
      const double se = sd / std::sqrt(static_cast<double>(diff.size()));
      // excess of random over nnn, in standard errors
      const double excess = se > 0 ? m / se : (m > 0 ? INFINITY : -INFINITY);
      worst = std::max(worst, excess);
      if (m > se) {
        pass = false;
        detail += "N=" + std::to_string(n) + " eps=" + num(eps) + " random exceeds nnn by " +
                  num(m) + " (se " + num(se) + "); ";
      }
    }
  }
  detail += "largest (random - nnn) / se = " + num(worst) + " (limit 1)";
  return {pass, detail};
}

// ---- criterion 9 -----------------------------------------------------------

std::string solver_suite(std::size_t& checked) {
  std::mt19937_64 gen(909);
  std::uniform_real_distribution<double> u(kLow, kHigh), e_log(-6.0, 0.0);
  std::uniform_int_distribution<std::size_t> size(2, 40);
  for (checked = 0; checked < 500; ++checked) {
    const std::size_t n = size(gen);
    std::vector<double> c(n - 1);
    for (double& x : c) x = u(gen);
    const double eps = std::pow(10.0, e_log(gen));
    const RandomStream rng = derive_instance_rng(909, checked, 0);
    const PerturbationSpec pert =
        n >= 3 ? (checked % 2 ? sample_nnn(rng, n, kLow, kHigh, eps)
                              : sample_random_edges(rng, n, n - 2, kLow, kHigh, eps))
               : PerturbationSpec{};
    const HamiltonianMatrix h = build_perturbed_hamiltonian(ChainSpec(n, c), pert);
    const SpectralData s = eigendecompose(h);
    double trace = 0, fe = 0, fh = 0;
    for (double x : h.entries()) fh += x * x;
    for (std::size_t k = 1; k <= n; ++k) {
      const double ek = s.eigenvalues[k - 1];
      if (k > 1 && s.eigenvalues[k - 2] > ek) return "eigenvalues out of order";
      trace += ek;
      fe += ek * ek;
      double res = 0;
      std::size_t lead = 1;
      for (std::size_t r = 1; r <= n; ++r) {
        double hv = 0;
        for (std::size_t q = 1; q <= n; ++q) hv += h(r - 1, q - 1) * s.overlap(q, k);
        res = std::max(res, std::fabs(hv - ek * s.overlap(r, k)));
        if (std::fabs(s.overlap(r, k)) > std::fabs(s.overlap(lead, k))) lead = r;
      }
      if (res > kSolverTolerance * std::max(1.0, std::fabs(ek))) return "residual " + num(res);
      if (s.overlap(lead, k) < 0) return "sign convention";
      for (std::size_t j = k; j <= n; ++j) {
        double dot = 0;
        for (std::size_t r = 1; r <= n; ++r) dot += s.overlap(r, j) * s.overlap(r, k);
        if (std::fabs(dot - (j == k)) > kSolverTolerance) return "orthonormality " + num(dot);
      }
    }
    const double dn = static_cast<double>(n);
    if (std::fabs(trace) > kSolverTolerance * dn) return "trace " + num(trace);
    if (std::fabs(fe - fh) > kSolverTolerance * dn * dn) return "frobenius";
    for (std::size_t site = 1; site <= n; ++site) {
      double w = 0;
      for (std::size_t k = 1; k <= n; ++k) w += s.overlap(site, k) * s.overlap(site, k);
      if (std::fabs(w - 1) > kSolverTolerance) return "completeness " + num(w);
    }
  }
  return {};
}

std::string zero_forcing_suite() {
  std::mt19937_64 gen(9090);
  std::bernoulli_distribution edge(0.3), member(0.3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 10;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (edge(gen)) edges.emplace_back(i, j);
    const CouplingGraph g(n, edges);
    VertexSet a, b;
    for (std::size_t v = 1; v <= n; ++v) {
      if (member(gen)) a.insert(v);
      if (member(gen)) b.insert(v);
    }
    b.insert(a.begin(), a.end());
    const VertexSet ca = zero_forcing_closure(g, a), cb = zero_forcing_closure(g, b);
    if (!std::includes(cb.begin(), cb.end(), ca.begin(), ca.end())) return "monotonicity";
    if (zero_forcing_closure(g, ca) != ca) return "idempotence";
    for (int k = 0; k < 10; ++k) {
      auto choose = [&](std::size_t m) {
        return std::uniform_int_distribution<std::size_t>(0, m - 1)(gen);
      };
      if (zero_forcing_closure_ordered(g, a, choose) != ca) return "order independence";
    }
  }
  return {};
}

// Runs one table-producing C call and returns its CSV.
std::string table_csv(const std::function<hopest_status(hopest_table**)>& call) {
  hopest_table* t = nullptr;
  if (call(&t) != HOPEST_OK) return "<error: " + std::string(hopest_last_error()) + ">";
  char* csv = nullptr;
  std::string out = "<error: csv>";
  if (hopest_table_csv(t, 1, &csv) == HOPEST_OK) out = csv;
  hopest_string_free(csv);
  hopest_table_free(t);
  return out;
}

std::string determinism_suite() {
  const char* cfg =
      R"({"master_seed": 42, "instances": 64, "n_sites": 24,
          "epsilon_grid": [0, 1e-5, 1e-3, 1e-1], "topology": "random:22"})";
  const char* variants = R"([{"label": "nnn", "topology": "nnn"},
                              {"label": "random", "topology": "random:22"}])";
  auto run = [&](unsigned w) {
    return table_csv([&](hopest_table** t) {
             return hopest_error_profile(cfg, 1e-4, w, t);
           }) +
           table_csv([&](hopest_table** t) {
             return hopest_critical_length_sweep(cfg, kThreshold, w, t);
           }) +
           table_csv([&](hopest_table** t) {
             return hopest_topology_compare(cfg, variants, 1e-4, w, t);
           });
  };
  const std::string one = run(1), eight = run(8), again = run(8);
  if (one.find("<error") != std::string::npos) return "C API call failed: " + one;
  if (one != eight) return "1 vs 8 workers differ";
  if (eight != again) return "rerun differs";
  return {};
}

Verdict solver_and_invariants() {
  std::size_t checked = 0;
  const std::string solver = solver_suite(checked);
  const std::string zf = zero_forcing_suite();
  const std::string det = determinism_suite();
  std::string detail = "solver " + (solver.empty() ? "ok on 500" : "failed on #" + std::to_string(checked) + ": " + solver) +
                       ", zero forcing " + (zf.empty() ? "ok on 200" : "failed: " + zf) +
                       ", determinism " + (det.empty() ? "byte-identical 1 vs 8 workers" : "failed: " + det);
  return {solver.empty() && zf.empty() && det.empty(), detail};
}

struct Criterion {
  const char* title;
  std::function<Verdict()> run;
};

const Criterion kCriteria[] = {
    {"exactness at eps=0 (round trip)", exactness_at_zero},
    {"first-coupling identity, exact", first_coupling_identity},
    {"second-coupling law, super-quadratic remainder", second_order_law},
    {"linear eps scaling", linear_scaling},
    {"ansatz bound n^(7/6) eps max(d), N=30", ansatz_bound_holds},
    {"critical length falls with eps", critical_length_trend},
    {"nnn vs random 18-edge ordering, N=20", topology_ordering},
    {"random topologies give shorter critical lengths", critical_length_ordering},
    {"solver and invariant suite", solver_and_invariants},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion 1-9]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > 9) {
    std::fprintf(stderr, "criterion must be 1-9\n");
    return 2;
  }
  int failed = 0;
  for (int k = 1; k <= 9; ++k) {
    if (only && k != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = kCriteria[k - 1].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s | %s | %.1fs\n", v.pass ? "PASS" : "FAIL", k,
                kCriteria[k - 1].title, v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed ? 1 : 0;
}
