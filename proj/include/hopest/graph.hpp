// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace hopest {

class ChainSpec;
class PerturbationSpec;

/// Sets of vertices are 1-indexed and ordered.
using VertexSet = std::set<std::size_t>;

/// Simple undirected graph on vertices 1..n_vertices.
class CouplingGraph {
 public:
  /// Duplicate pairs (in either orientation) collapse to one edge; self-loops
  /// and out-of-range vertices are rejected.
  CouplingGraph(std::size_t n_vertices,
                const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n_vertices() const { return adjacency_.size(); }
  std::size_t n_edges() const;

  /// Sorted neighbours of a 1-indexed vertex.
  const std::vector<std::size_t>& neighbours(std::size_t v) const {
    return adjacency_.at(v - 1);
  }

  static CouplingGraph path(std::size_t n);
  static CouplingGraph cycle(std::size_t n);
  static CouplingGraph complete(std::size_t n);

  /// Chain edges plus every perturbation edge.
  static CouplingGraph from_model(const ChainSpec& chain,
                                  const PerturbationSpec& pert);

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

VertexSet zero_forcing_closure(const CouplingGraph& graph,
                               const VertexSet& initial_blue);

/// Same fixed point, but forces are applied one at a time in the order picked
/// by `choose` among all currently applicable (forcer, target) pairs. Exposed
/// for order-independence checks.
VertexSet zero_forcing_closure_ordered(
    const CouplingGraph& graph, const VertexSet& initial_blue,
    const std::function<std::size_t(std::size_t n_applicable)>& choose);

bool is_zero_forcing_set(const CouplingGraph& graph, const VertexSet& candidate);

inline constexpr std::size_t kDefaultZeroForcingCap = 16;

/// Exhaustive search in increasing subset size. Throws UnsupportedSizeError
/// when the graph has more than `cap` vertices.
std::size_t minimum_zero_forcing_number(const CouplingGraph& graph,
                                        std::size_t cap = kDefaultZeroForcingCap);

}  // namespace hopest
