// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hopest {

class HamiltonianMatrix;

/// Eigenpairs of a real symmetric matrix.
///
/// Eigenvalues are ascending. Column k of the (row-major) eigenvector matrix
/// is |e_k>, so the overlap <n|e_k> sits at row n-1, column k-1. In each
/// column the first entry of largest magnitude is non-negative.
struct SpectralData {
  std::size_t dim = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;
  /// Rounding remainders of the two arrays above (same layouts): the solver
  /// works in extended precision and value + tail recovers its result.
  /// Either may be empty, meaning zero.
  std::vector<double> eigenvalue_tails;
  std::vector<double> eigenvector_tails;
  /// Set when two eigenvalues lie within kDegeneracyGap of each other.
  bool near_degenerate = false;

  double overlap(std::size_t site, std::size_t k) const {
    return eigenvectors[(site - 1) * dim + (k - 1)];
  }
};

inline constexpr double kDegeneracyGap = 1e-9;

SpectralData eigendecompose(const HamiltonianMatrix& h);

/// General symmetric input (diagonal allowed). Rejects non-square, asymmetric
/// or non-finite input with ValidationError; throws ConvergenceError if the
/// QL sweep runs out of iterations.
SpectralData eigendecompose(std::size_t dim, std::span<const double> entries);

/// <site|e_k> for k = 1..N.
std::vector<double> site_overlaps(const SpectralData& s, std::size_t site);

/// sum_k e_k^power |<site|e_k>|^2, i.e. <site|H^power|site>.
/// Remainders matching site_overlaps(s, site); zeros when s carries none.
std::vector<double> site_overlap_tails(const SpectralData& s, std::size_t site);

double moment(const SpectralData& s, std::size_t site, unsigned power);

}  // namespace hopest
