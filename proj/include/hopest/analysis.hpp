// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopest/ensemble.hpp"

namespace hopest {

struct AnsatzParams {
  double p = 7.0 / 6.0;
  double max_d = 1.0;
  double epsilon = 0.0;
};

/// n^p * epsilon * max_d.
double ansatz_bound(std::size_t n, const AnsatzParams& params);

/// Per-coupling ensemble statistics. `instance_count` instances contributed;
/// `n_excluded` broke down before this coupling or failed to diagonalize.
struct ErrorProfile {
  std::size_t site = 0;
  double mean_delta = 0.0;
  double std_delta = 0.0;
  double bound = 0.0;
  std::size_t instance_count = 0;
  std::size_t n_excluded = 0;
};

struct CriticalLengthResult {
  double epsilon = 0.0;
  std::size_t n_sites = 0;
  double threshold = 0.0;
  double mean_lc = 0.0;
  double std_lc = 0.0;
  std::size_t instance_count = 0;
  std::size_t n_excluded = 0;
};

/// What the nearest-neighbour scheme makes of one ensemble member.
struct InstanceOutcome {
  /// Delta_n for the couplings estimated before any breakdown.
  std::vector<double> deltas;
  std::optional<std::size_t> breakdown_at;
  /// max d over the instance's perturbation edges (0 if none).
  double max_d = 0.0;
  /// Set when the eigensolver did not converge; deltas is then empty.
  std::optional<std::string> failure;
};

/// Build H^eps, diagonalize, run the nearest-neighbour recursion on site-1
/// data and compare with the true chain.
InstanceOutcome run_instance(const Instance& instance);

/// Runs `config.instances` members at one epsilon. Member i draws from
/// derive_instance_rng(seed, i, epsilon_index); results are ordered by i and
/// do not depend on `workers`.
std::vector<InstanceOutcome> simulate(const EnsembleConfig& config,
                                      const TopologyMode& mode,
                                      std::size_t epsilon_index, double epsilon,
                                      unsigned workers);

/// Aggregates outcomes per coupling n = 1..n_sites-1. The bound column uses
/// max_d = config.coupling_high, the largest weight the sampler can draw.
std::vector<ErrorProfile> aggregate_profile(
    std::span<const InstanceOutcome> outcomes, const EnsembleConfig& config,
    double epsilon, double p = 7.0 / 6.0);

/// Ensemble error profile at one epsilon, drawing members from epsilon index 0.
std::vector<ErrorProfile> error_profile(const EnsembleConfig& config,
                                        double epsilon, unsigned workers = 1);

inline constexpr double kDefaultThreshold = 0.122;

/// 1 + the number of leading couplings with Delta_n <= threshold. Couplings
/// missing from `deltas` (breakdown) and NaN entries count as failures. A
/// chain whose N - 1 couplings all pass has L_C = N.
std::size_t critical_length(std::span<const double> deltas,
                            std::size_t n_sites, double threshold);

/// Mean and spread of L_C at every epsilon of `config.epsilon_grid`.
std::vector<CriticalLengthResult> critical_length_sweep(
    const EnsembleConfig& config, double threshold, unsigned workers = 1);

struct LabeledProfile {
  std::string label;
  std::vector<ErrorProfile> profile;
};

/// Error profiles for several topologies with paired member streams: member i
/// of every variant draws from the same stream, so chains always match and
/// perturbation weights match whenever the edge counts do.
std::vector<LabeledProfile> topology_compare(
    const EnsembleConfig& config,
    const std::vector<std::pair<std::string, TopologyMode>>& variants,
    double epsilon, unsigned workers = 1);

/// Sample mean and (n - 1)-normalized standard deviation; std is 0 for n < 2.
std::pair<double, double> mean_and_std(std::span<const double> values);

}  // namespace hopest
