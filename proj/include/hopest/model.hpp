// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hopest {

/// Nearest-neighbour chain: `nearest[n-1]` couples sites n and n+1 (1-indexed).
class ChainSpec {
 public:
  /// Throws ValidationError naming the first non-positive (1-indexed)
  /// coupling, or on a length mismatch.
  ChainSpec(std::size_t n_sites, std::vector<double> nearest);

  std::size_t n_sites() const { return n_sites_; }
  const std::vector<double>& nearest() const { return nearest_; }

  /// Coupling between sites n and n+1, 1-indexed.
  double coupling(std::size_t n) const { return nearest_.at(n - 1); }

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  std::size_t n_sites_;
  std::vector<double> nearest_;
};

/// A longer-range hop between 1-indexed sites i < j with j - i >= 2.
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Extra couplings entering the Hamiltonian as epsilon * weight.
class PerturbationSpec {
 public:
  PerturbationSpec() = default;

  /// Checks epsilon >= 0, weights > 0, i < j, j - i >= 2 and no duplicate
  /// pairs. Site bounds are checked against a chain when the two are combined.
  PerturbationSpec(double epsilon, std::vector<Edge> edges);

  double epsilon() const { return epsilon_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Throws ValidationError if any edge references a site outside [1, n_sites].
  void check_sites(std::size_t n_sites) const;

  friend bool operator==(const PerturbationSpec&,
                         const PerturbationSpec&) = default;

 private:
  double epsilon_ = 0.0;
  std::vector<Edge> edges_;
};

/// Dense real symmetric hopping matrix with zero diagonal, stored row-major.
class HamiltonianMatrix {
 public:
  /// Validates exact symmetry, a zero diagonal and finiteness.
  HamiltonianMatrix(std::size_t dim, std::vector<double> entries);

  std::size_t dim() const { return dim_; }
  std::span<const double> entries() const { return entries_; }

  /// 0-indexed element access.
  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  friend bool operator==(const HamiltonianMatrix&,
                         const HamiltonianMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

HamiltonianMatrix build_chain_hamiltonian(const ChainSpec& spec);

HamiltonianMatrix build_perturbed_hamiltonian(const ChainSpec& spec,
                                              const PerturbationSpec& pert);

/// Canonical next-nearest-neighbour topology: edges (l, l+2, d_l) for
/// l = 1..N-2, where N - 2 = d_values.size().
PerturbationSpec nnn_perturbation(std::span<const double> d_values,
                                  double epsilon);

}  // namespace hopest
