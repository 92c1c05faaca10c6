// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <type_traits>

#include "hopest/errors.hpp"

namespace hopest {

namespace {

// Fork tags. Chains, weights and pair choices never share a stream.
constexpr std::uint64_t kChainStream = 1;
constexpr std::uint64_t kPerturbationStream = 2;
constexpr std::uint64_t kWeightStream = 3;
constexpr std::uint64_t kPairStream = 4;

void check_interval(double low, double high) {
  if (!std::isfinite(low) || !std::isfinite(high) || !(low > 0.0) ||
      !(low < high))
    throw ValidationError("coupling interval needs 0 < low < high, got [" +
                          std::to_string(low) + ", " + std::to_string(high) +
                          "]");
}

std::vector<double> draw(RandomStream stream, std::size_t count, double low,
                         double high) {
  std::vector<double> out(count);
  for (double& x : out) x = stream.uniform(low, high);
  return out;
}

std::size_t resolved_count(const topology::RandomEdges& mode,
                           std::size_t n_sites) {
  if (mode.count != 0) return mode.count;
  return n_sites >= 2 ? n_sites - 2 : 0;
}

}  // namespace

std::string describe(const TopologyMode& mode) {
  if (std::holds_alternative<topology::NextNearest>(mode)) return "nnn";
  if (const auto* r = std::get_if<topology::RandomEdges>(&mode))
    return r->count == 0 ? std::string("random")
                         : "random:" + std::to_string(r->count);
  return "fixed:" +
         std::to_string(std::get<topology::FixedEdges>(mode).pairs.size());
}

void EnsembleConfig::validate() const {
  if (instances < 1) throw ValidationError("instances must be >= 1");
  if (n_sites < 2) throw ValidationError("n_sites must be >= 2");
  check_interval(coupling_low, coupling_high);
  for (double eps : epsilon_grid)
    if (!std::isfinite(eps) || eps < 0.0)
      throw ValidationError("epsilon grid values must be >= 0, got " +
                            std::to_string(eps));
  if (const auto* r = std::get_if<topology::RandomEdges>(&topology)) {
    const std::size_t want = resolved_count(*r, n_sites);
    if (want > available_long_range_pairs(n_sites))
      throw ValidationError("random topology asks for " +
                            std::to_string(want) + " edges but only " +
                            std::to_string(available_long_range_pairs(n_sites)) +
                            " pairs are available");
  }
  if (const auto* f = std::get_if<topology::FixedEdges>(&topology)) {
    std::vector<Edge> edges;
    for (auto [i, j] : f->pairs) edges.push_back({i, j, 1.0});
    PerturbationSpec(0.0, edges).check_sites(n_sites);
  }
}

std::vector<double> log_spaced(double low, double high, std::size_t count) {
  if (count == 0) return {};
  if (!(low > 0.0) || !(high >= low))
    throw ValidationError("log spacing needs 0 < low <= high");
  if (count == 1) return {low};
  std::vector<double> out(count);
  const double a = std::log10(low);
  const double b = std::log10(high);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) /
                                    static_cast<double>(count - 1));
  out.front() = low;
  out.back() = high;
  return out;
}

std::vector<double> default_epsilon_grid() {
  std::vector<double> grid{0.0};
  const auto tail = log_spaced(1e-6, 1e-1, 13);
  grid.insert(grid.end(), tail.begin(), tail.end());
  return grid;
}

std::size_t available_long_range_pairs(std::size_t n_sites) {
  if (n_sites < 3) return 0;
  return (n_sites - 1) * (n_sites - 2) / 2;
}

ChainSpec sample_chain(RandomStream rng, std::size_t n_sites, double low,
                       double high) {
  check_interval(low, high);
  if (n_sites < 1) throw ValidationError("n_sites must be >= 1");
  return ChainSpec(n_sites, draw(rng, n_sites - 1, low, high));
}

PerturbationSpec sample_nnn(RandomStream rng, std::size_t n_sites, double low,
                            double high, double epsilon) {
  check_interval(low, high);
  const std::size_t count = n_sites >= 2 ? n_sites - 2 : 0;
  const std::vector<double> d = draw(rng.fork(kWeightStream), count, low, high);
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < count; ++l) edges.push_back({l + 1, l + 3, d[l]});
  return PerturbationSpec(epsilon, std::move(edges));
}

PerturbationSpec sample_random_edges(RandomStream rng, std::size_t n_sites,
                                     std::size_t edge_count, double low,
                                     double high, double epsilon) {
  check_interval(low, high);
  std::vector<std::pair<std::size_t, std::size_t>> pool;
  for (std::size_t i = 1; i <= n_sites; ++i)
    for (std::size_t j = i + 2; j <= n_sites; ++j) pool.emplace_back(i, j);
  if (edge_count > pool.size())
    throw ValidationError("cannot place " + std::to_string(edge_count) +
                          " long-range edges on " + std::to_string(n_sites) +
                          " sites; only " + std::to_string(pool.size()) +
                          " pairs are available");

  // Partial Fisher-Yates: the first edge_count slots become the sample.
  RandomStream picker = rng.fork(kPairStream);
  for (std::size_t k = 0; k < edge_count; ++k) {
    const std::size_t swap_with =
        k + static_cast<std::size_t>(picker.below(pool.size() - k));
    std::swap(pool[k], pool[swap_with]);
  }
  pool.resize(edge_count);
  std::sort(pool.begin(), pool.end());
  return sample_fixed_edges(rng, n_sites, pool, low, high, epsilon);
}

PerturbationSpec sample_fixed_edges(
    RandomStream rng, std::size_t n_sites,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, double low,
    double high, double epsilon) {
  check_interval(low, high);
  const std::vector<double> d =
      draw(rng.fork(kWeightStream), pairs.size(), low, high);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    edges.push_back({pairs[k].first, pairs[k].second, d[k]});
  PerturbationSpec out(epsilon, std::move(edges));
  out.check_sites(n_sites);
  return out;
}

Instance sample_instance(const RandomStream& rng, std::size_t n_sites,
                         double low, double high, double epsilon,
                         const TopologyMode& mode) {
  ChainSpec chain = sample_chain(rng.fork(kChainStream), n_sites, low, high);
  const RandomStream pert_rng = rng.fork(kPerturbationStream);
  PerturbationSpec pert = std::visit(
      [&](const auto& m) -> PerturbationSpec {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, topology::NextNearest>) {
          return sample_nnn(pert_rng, n_sites, low, high, epsilon);
        } else if constexpr (std::is_same_v<M, topology::RandomEdges>) {
          return sample_random_edges(pert_rng, n_sites,
                                     resolved_count(m, n_sites), low, high,
                                     epsilon);
        } else {
          return sample_fixed_edges(pert_rng, n_sites, m.pairs, low, high,
                                    epsilon);
        }
      },
      mode);
  return {std::move(chain), std::move(pert)};
}

const topology::FixedEdges& standin_graph_b() {
  static const topology::FixedEdges graph{{
      {1, 3}, {2, 12}, {3, 20}, {5, 10}, {5, 16}, {5, 18},
      {6, 11}, {6, 20}, {7, 20}, {9, 14}, {9, 16}, {9, 19},
      {10, 13}, {10, 15}, {10, 17}, {10, 20}, {11, 17}, {12, 15},
  }};
  return graph;
}

const topology::FixedEdges& standin_graph_c() {
  static const topology::FixedEdges graph{{
      {1, 10}, {1, 18}, {2, 10}, {2, 11}, {2, 19}, {3, 17},
      {4, 8}, {4, 17}, {5, 14}, {6, 15}, {7, 13}, {10, 17},
      {10, 19}, {10, 20}, {11, 15}, {11, 16}, {14, 17}, {16, 18},
  }};
  return graph;
}

}  // namespace hopest
