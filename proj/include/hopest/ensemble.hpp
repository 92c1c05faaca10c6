// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopest/model.hpp"
#include "hopest/random.hpp"

namespace hopest {

namespace topology {

/// Edges (l, l+2) for every l.
struct NextNearest {
  friend bool operator==(const NextNearest&, const NextNearest&) = default;
};

/// The same set of pairs for every instance; weights are redrawn.
struct FixedEdges {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  friend bool operator==(const FixedEdges&, const FixedEdges&) = default;
};

/// A fresh set of `count` pairs with j - i >= 2 for every instance.
/// count == 0 means the default of N - 2.
struct RandomEdges {
  std::size_t count = 0;
  friend bool operator==(const RandomEdges&, const RandomEdges&) = default;
};

}  // namespace topology

using TopologyMode =
    std::variant<topology::NextNearest, topology::FixedEdges,
                 topology::RandomEdges>;

/// Short textual form: "nnn", "random:<count>" or "fixed:<n_pairs>".
std::string describe(const TopologyMode& mode);

struct EnsembleConfig {
  std::uint64_t master_seed = 0;
  std::size_t instances = 1;
  std::size_t n_sites = 2;
  double coupling_low = 0.95;
  double coupling_high = 1.05;
  std::vector<double> epsilon_grid;
  TopologyMode topology = topology::NextNearest{};

  /// Throws ValidationError on a broken invariant.
  void validate() const;
};

/// Default grid: 0 followed by 13 log-spaced points in [1e-6, 1e-1].
std::vector<double> default_epsilon_grid();

/// `count` log-spaced points in [low, high], both ends included.
std::vector<double> log_spaced(double low, double high, std::size_t count);

ChainSpec sample_chain(RandomStream rng, std::size_t n_sites, double low,
                       double high);

PerturbationSpec sample_nnn(RandomStream rng, std::size_t n_sites, double low,
                            double high, double epsilon);

/// Uniform choice of `edge_count` distinct pairs with j - i >= 2, without
/// replacement. Weights come from a forked stream shared with `sample_nnn`, so
/// the k-th weight matches the k-th next-nearest weight for the same rng.
PerturbationSpec sample_random_edges(RandomStream rng, std::size_t n_sites,
                                     std::size_t edge_count, double low,
                                     double high, double epsilon);

PerturbationSpec sample_fixed_edges(
    RandomStream rng, std::size_t n_sites,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, double low,
    double high, double epsilon);

/// Number of pairs (i, j), 1 <= i < j <= n_sites, with j - i >= 2.
std::size_t available_long_range_pairs(std::size_t n_sites);

struct Instance {
  ChainSpec chain;
  PerturbationSpec perturbation;
};

/// One ensemble member. The chain and the perturbation come from separate
/// forks of `rng`, so variants that share a stream share their chains.
Instance sample_instance(const RandomStream& rng, std::size_t n_sites,
                         double low, double high, double epsilon,
                         const TopologyMode& mode);

/// Two 18-edge graphs on N = 20 used as stand-ins for the structured
/// long-range topologies in the topology comparison. They were drawn once by
/// `sample_random_edges` (seeds 0xB and 0xC) and frozen here. They are
/// reconstructions, not measured device layouts.
const topology::FixedEdges& standin_graph_b();
const topology::FixedEdges& standin_graph_c();

}  // namespace hopest
