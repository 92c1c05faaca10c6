// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hopest {

struct SpectralData;

/// Output of the nearest-neighbour recursion.
struct ReconstructionResult {
  /// c_n^eps for n = 1..estimated.size().
  std::vector<double> estimated;
  /// Rounding remainder of each c_n^eps: the recursion value is
  /// estimated[n] + estimated_tail[n]. Small errors Delta_n need it.
  std::vector<double> estimated_tail;
  /// Row-major, estimated.size() + 1 rows of N values: row r holds the
  /// recursion's <r+1|e_k>_eps. Row 0 is the measured site-1 data.
  std::vector<double> estimated_overlaps;
  /// 1-indexed coupling at which the squared coupling fell below the floor.
  std::optional<std::size_t> breakdown_at;
  /// Delta_n, filled by `attach_errors`.
  std::vector<double> errors_delta;
};

/// Output of the next-nearest-neighbour recursion.
struct ExtendedReconstructionResult {
  std::vector<double> estimated_c;
  std::vector<double> estimated_d;
  /// 1-indexed d_n at which eps^2 d_n^2 fell below the floor.
  std::optional<std::size_t> breakdown_at;
};

/// Relative floor on squared couplings: the recursion stops once a squared
/// coupling drops below kBreakdownFloor * sum(e_k^2) / N.
inline constexpr double kBreakdownFloor = 1e-14;

/// Tolerance on |sum_k <1|e_k>^2 - 1| for accepted site overlaps.
inline constexpr double kNormalizationTolerance = 1e-8;

/// Nearest-neighbour (Jacobi chain) recursion from the spectrum and site-1
/// overlaps. Runs for at most `max_terms` couplings (<= N - 1).
ReconstructionResult reconstruct_nearest_neighbor(
    std::span<const double> eigenvalues, std::span<const double> site1_overlaps,
    std::size_t max_terms);

/// Same recursion fed from a decomposition, including its extended-precision
/// remainders. Preferred when the spectrum comes from eigendecompose.
ReconstructionResult reconstruct_nearest_neighbor(const SpectralData& spectrum,
                                                  std::size_t max_terms);

/// Recovers c_1..c_{N-1} and d_1..d_{N-2} of a chain with next-nearest
/// couplings eps*d_l, from signed overlaps at sites 1 and 2. eps must be > 0.
ExtendedReconstructionResult reconstruct_next_nearest(
    std::span<const double> eigenvalues, std::span<const double> site1_overlaps,
    std::span<const double> site2_overlaps, double epsilon);

ExtendedReconstructionResult reconstruct_next_nearest(
    const SpectralData& spectrum, double epsilon);

/// Delta_n = sqrt(|(c_n^eps)^2 - c_n^2|) for n = 1..estimated.size().
std::vector<double> estimation_errors(std::span<const double> true_couplings,
                                      std::span<const double> estimated);

/// As above with estimated[n] + tail[n] as the estimate; tail may be empty.
std::vector<double> estimation_errors(std::span<const double> true_couplings,
                                      std::span<const double> estimated,
                                      std::span<const double> tail);

/// Fills `result.errors_delta` against the true couplings.
void attach_errors(ReconstructionResult& result,
                   std::span<const double> true_couplings);

}  // namespace hopest
