// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hopest/errors.hpp"
#include "hopest/estimation.hpp"
#include "hopest/spectral.hpp"

namespace hopest {

namespace {

// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
// handled by exactly one thread; the first exception is rethrown after join.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0)
    throw ValidationError("epsilon must be >= 0");
}

}  // namespace

double ansatz_bound(std::size_t n, const AnsatzParams& params) {
  if (n < 1) throw ValidationError("ansatz bound is defined for n >= 1");
  return std::pow(static_cast<double>(n), params.p) * params.epsilon *
         params.max_d;
}

std::pair<double, double> mean_and_std(std::span<const double> values) {
  if (values.empty()) return {0.0, 0.0};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

InstanceOutcome run_instance(const Instance& instance) {
  InstanceOutcome out;
  for (const Edge& e : instance.perturbation.edges())
    out.max_d = std::max(out.max_d, e.weight);
  SpectralData spectrum;
  try {
    spectrum = eigendecompose(
        build_perturbed_hamiltonian(instance.chain, instance.perturbation));
  } catch (const ConvergenceError& e) {
    out.failure = e.what();
    return out;
  }
  const std::size_t n = instance.chain.n_sites();
  ReconstructionResult r = reconstruct_nearest_neighbor(spectrum, n - 1);
  attach_errors(r, instance.chain.nearest());
  out.deltas = std::move(r.errors_delta);
  out.breakdown_at = r.breakdown_at;
  return out;
}

std::vector<InstanceOutcome> simulate(const EnsembleConfig& config,
                                      const TopologyMode& mode,
                                      std::size_t epsilon_index, double epsilon,
                                      unsigned workers) {
  EnsembleConfig checked = config;
  checked.topology = mode;
  checked.validate();
  check_epsilon(epsilon);
  std::vector<InstanceOutcome> outcomes(config.instances);
  parallel_for(config.instances, workers, [&](std::size_t i) {
    const RandomStream rng =
        derive_instance_rng(config.master_seed, i, epsilon_index);
    outcomes[i] = run_instance(sample_instance(rng, config.n_sites,
                                               config.coupling_low,
                                               config.coupling_high, epsilon,
                                               mode));
  });
  return outcomes;
}

std::vector<ErrorProfile> aggregate_profile(
    std::span<const InstanceOutcome> outcomes, const EnsembleConfig& config,
    double epsilon, double p) {
  const AnsatzParams params{p, config.coupling_high, epsilon};
  std::vector<ErrorProfile> rows;
  std::vector<double> values;
  for (std::size_t n = 1; n < config.n_sites; ++n) {
    values.clear();
    for (const InstanceOutcome& o : outcomes)
      if (o.deltas.size() >= n) values.push_back(o.deltas[n - 1]);
    const auto [mean, sd] = mean_and_std(values);
    rows.push_back({n, mean, sd, ansatz_bound(n, params), values.size(),
                    outcomes.size() - values.size()});
  }
  return rows;
}

std::vector<ErrorProfile> error_profile(const EnsembleConfig& config,
                                        double epsilon, unsigned workers) {
  const auto outcomes = simulate(config, config.topology, 0, epsilon, workers);
  return aggregate_profile(outcomes, config, epsilon);
}

std::size_t critical_length(std::span<const double> deltas,
                            std::size_t n_sites, double threshold) {
  if (!(threshold > 0.0))
    throw ValidationError("critical-length threshold must be > 0");
  if (n_sites < 1) throw ValidationError("n_sites must be >= 1");
  if (deltas.size() > n_sites - 1)
    throw ValidationError("more errors than couplings in the chain");
  std::size_t passing = 0;
  while (passing < deltas.size() && deltas[passing] <= threshold) ++passing;
  return 1 + passing;
}

std::vector<CriticalLengthResult> critical_length_sweep(
    const EnsembleConfig& config, double threshold, unsigned workers) {
  config.validate();
  if (!(threshold > 0.0))
    throw ValidationError("critical-length threshold must be > 0");
  if (config.epsilon_grid.empty())
    throw ValidationError("critical-length sweep needs a non-empty epsilon grid");
  std::vector<CriticalLengthResult> rows;
  for (std::size_t e = 0; e < config.epsilon_grid.size(); ++e) {
    const double eps = config.epsilon_grid[e];
    const auto outcomes = simulate(config, config.topology, e, eps, workers);
    std::vector<double> lengths;
    for (const InstanceOutcome& o : outcomes)
      if (!o.failure)
        lengths.push_back(static_cast<double>(
            critical_length(o.deltas, config.n_sites, threshold)));
    const auto [mean, sd] = mean_and_std(lengths);
    rows.push_back({eps, config.n_sites, threshold, mean, sd, lengths.size(),
                    outcomes.size() - lengths.size()});
  }
  return rows;
}

std::vector<LabeledProfile> topology_compare(
    const EnsembleConfig& config,
    const std::vector<std::pair<std::string, TopologyMode>>& variants,
    double epsilon, unsigned workers) {
  if (variants.empty())
    throw ValidationError("topology comparison needs at least one variant");
  for (const auto& [label, mode] : variants) {
    EnsembleConfig checked = config;
    checked.topology = mode;
    checked.validate();
  }
  std::vector<LabeledProfile> out;
  for (const auto& [label, mode] : variants) {
    const auto outcomes = simulate(config, mode, 0, epsilon, workers);
    out.push_back({label, aggregate_profile(outcomes, config, epsilon)});
  }
  return out;
}

}  // namespace hopest
