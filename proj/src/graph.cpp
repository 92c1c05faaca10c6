// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/graph.hpp"

#include <algorithm>
#include <string>

#include "hopest/errors.hpp"
#include "hopest/model.hpp"

namespace hopest {

CouplingGraph::CouplingGraph(
    std::size_t n_vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : adjacency_(n_vertices) {
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > n_vertices || b > n_vertices)
      throw ValidationError("edge (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") outside vertices 1.." +
                            std::to_string(n_vertices));
    if (a == b)
      throw ValidationError("self-loop at vertex " + std::to_string(a));
    adjacency_[a - 1].push_back(b);
    adjacency_[b - 1].push_back(a);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

std::size_t CouplingGraph::n_edges() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

CouplingGraph CouplingGraph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return CouplingGraph(n, e);
}

CouplingGraph CouplingGraph::cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  if (n > 2) e.emplace_back(n, 1);
  return CouplingGraph(n, e);
}

CouplingGraph CouplingGraph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  return CouplingGraph(n, e);
}

CouplingGraph CouplingGraph::from_model(const ChainSpec& chain,
                                        const PerturbationSpec& pert) {
  pert.check_sites(chain.n_sites());
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 1; v < chain.n_sites(); ++v) e.emplace_back(v, v + 1);
  for (const Edge& x : pert.edges()) e.emplace_back(x.i, x.j);
  return CouplingGraph(chain.n_sites(), e);
}

namespace {

std::vector<char> colour(const CouplingGraph& graph, const VertexSet& blue) {
  std::vector<char> is_blue(graph.n_vertices(), 0);
  for (std::size_t v : blue) {
    if (v < 1 || v > graph.n_vertices())
      throw ValidationError("vertex " + std::to_string(v) +
                            " outside 1.." +
                            std::to_string(graph.n_vertices()));
    is_blue[v - 1] = 1;
  }
  return is_blue;
}

VertexSet to_set(const std::vector<char>& is_blue) {
  VertexSet out;
  for (std::size_t v = 0; v < is_blue.size(); ++v)
    if (is_blue[v]) out.insert(v + 1);
  return out;
}

// The single white neighbour of a blue vertex, or 0 if there is none or
// more than one.
std::size_t forced_target(const CouplingGraph& graph,
                          const std::vector<char>& is_blue, std::size_t v) {
  std::size_t target = 0;
  for (std::size_t w : graph.neighbours(v)) {
    if (is_blue[w - 1]) continue;
    if (target != 0) return 0;
    target = w;
  }
  return target;
}

}  // namespace

VertexSet zero_forcing_closure(const CouplingGraph& graph,
                               const VertexSet& initial_blue) {
  std::vector<char> is_blue = colour(graph, initial_blue);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 1; v <= graph.n_vertices(); ++v) {
      if (!is_blue[v - 1]) continue;
      if (std::size_t t = forced_target(graph, is_blue, v); t != 0) {
        is_blue[t - 1] = 1;
        changed = true;
      }
    }
  }
  return to_set(is_blue);
}

VertexSet zero_forcing_closure_ordered(
    const CouplingGraph& graph, const VertexSet& initial_blue,
    const std::function<std::size_t(std::size_t)>& choose) {
  std::vector<char> is_blue = colour(graph, initial_blue);
  for (;;) {
    std::vector<std::size_t> targets;
    for (std::size_t v = 1; v <= graph.n_vertices(); ++v)
      if (is_blue[v - 1])
        if (std::size_t t = forced_target(graph, is_blue, v); t != 0)
          targets.push_back(t);
    if (targets.empty()) break;
    is_blue[targets[choose(targets.size()) % targets.size()] - 1] = 1;
  }
  return to_set(is_blue);
}

bool is_zero_forcing_set(const CouplingGraph& graph,
                         const VertexSet& candidate) {
  return zero_forcing_closure(graph, candidate).size() == graph.n_vertices();
}

std::size_t minimum_zero_forcing_number(const CouplingGraph& graph,
                                        std::size_t cap) {
  const std::size_t n = graph.n_vertices();
  if (n > cap)
    throw UnsupportedSizeError("exhaustive zero-forcing search refused for " +
                               std::to_string(n) + " vertices (cap " +
                               std::to_string(cap) + ")");
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    // Walk all k-subsets via a selection mask in lexicographic order.
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
    do {
      VertexSet subset;
      for (std::size_t v = 0; v < n; ++v)
        if (pick[v]) subset.insert(v + 1);
      if (is_zero_forcing_set(graph, subset)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n;
}

}  // namespace hopest
