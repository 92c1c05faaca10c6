// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/model.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "hopest/errors.hpp"

namespace hopest {

namespace {

template <typename... Args>
[[noreturn]] void fail(Args&&... parts) {
  std::ostringstream msg;
  (msg << ... << parts);
  throw ValidationError(msg.str());
}

}  // namespace

ChainSpec::ChainSpec(std::size_t n_sites, std::vector<double> nearest)
    : n_sites_(n_sites), nearest_(std::move(nearest)) {
  if (n_sites_ == 0) fail("chain needs at least one site");
  if (nearest_.size() != n_sites_ - 1)
    fail("chain of ", n_sites_, " sites needs ", n_sites_ - 1,
         " nearest couplings, got ", nearest_.size());
  for (std::size_t n = 0; n < nearest_.size(); ++n) {
    const double c = nearest_[n];
    if (!std::isfinite(c) || c <= 0.0)
      fail("nearest coupling at index ", n + 1, " must be positive, got ", c);
  }
}

PerturbationSpec::PerturbationSpec(double epsilon, std::vector<Edge> edges)
    : epsilon_(epsilon), edges_(std::move(edges)) {
  if (!std::isfinite(epsilon_) || epsilon_ < 0.0)
    fail("perturbation strength must be >= 0, got ", epsilon_);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges_) {
    if (e.i < 1 || e.j < 1) fail("edge (", e.i, ", ", e.j, ") uses site 0");
    if (e.i >= e.j)
      fail("edge (", e.i, ", ", e.j, ") must satisfy i < j");
    if (e.j - e.i < 2)
      fail("edge (", e.i, ", ", e.j,
           ") joins nearest neighbours; long-range edges need j - i >= 2");
    if (!std::isfinite(e.weight) || e.weight <= 0.0)
      fail("edge (", e.i, ", ", e.j, ") weight must be positive, got ",
           e.weight);
    if (!seen.emplace(e.i, e.j).second)
      fail("duplicate edge (", e.i, ", ", e.j, ")");
  }
}

void PerturbationSpec::check_sites(std::size_t n_sites) const {
  for (const Edge& e : edges_)
    if (e.j > n_sites)
      fail("edge (", e.i, ", ", e.j, ") exceeds chain of ", n_sites, " sites");
}

HamiltonianMatrix::HamiltonianMatrix(std::size_t dim,
                                     std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_)
    fail("matrix of dimension ", dim_, " needs ", dim_ * dim_,
         " entries, got ", entries_.size());
  for (std::size_t r = 0; r < dim_; ++r) {
    if (entries_[r * dim_ + r] != 0.0)
      fail("hopping Hamiltonian has non-zero diagonal at site ", r + 1);
    for (std::size_t c = 0; c < dim_; ++c) {
      const double v = entries_[r * dim_ + c];
      if (!std::isfinite(v)) fail("non-finite entry at (", r + 1, ", ", c + 1, ")");
      if (v != entries_[c * dim_ + r])
        fail("matrix is not symmetric at (", r + 1, ", ", c + 1, ")");
    }
  }
}

namespace {

std::vector<double> chain_entries(const ChainSpec& spec) {
  const std::size_t n = spec.n_sites();
  std::vector<double> h(n * n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k * n + k + 1] = spec.nearest()[k];
    h[(k + 1) * n + k] = spec.nearest()[k];
  }
  return h;
}

}  // namespace

HamiltonianMatrix build_chain_hamiltonian(const ChainSpec& spec) {
  return HamiltonianMatrix(spec.n_sites(), chain_entries(spec));
}

HamiltonianMatrix build_perturbed_hamiltonian(const ChainSpec& spec,
                                              const PerturbationSpec& pert) {
  pert.check_sites(spec.n_sites());
  const std::size_t n = spec.n_sites();
  std::vector<double> h = chain_entries(spec);
  for (const Edge& e : pert.edges()) {
    const double v = pert.epsilon() * e.weight;
    h[(e.i - 1) * n + (e.j - 1)] = v;
    h[(e.j - 1) * n + (e.i - 1)] = v;
  }
  return HamiltonianMatrix(n, std::move(h));
}

PerturbationSpec nnn_perturbation(std::span<const double> d_values,
                                  double epsilon) {
  std::vector<Edge> edges;
  edges.reserve(d_values.size());
  for (std::size_t l = 0; l < d_values.size(); ++l) {
    if (!(d_values[l] > 0.0))
      fail("next-nearest coupling at index ", l + 1, " must be positive, got ",
           d_values[l]);
    edges.push_back({l + 1, l + 3, d_values[l]});
  }
  return PerturbationSpec(epsilon, std::move(edges));
}

}  // namespace hopest
