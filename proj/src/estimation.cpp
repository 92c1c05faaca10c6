// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/estimation.hpp"

#include <cmath>
#include <string>

#include "hopest/errors.hpp"
#include "hopest/spectral.hpp"

namespace hopest {

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b,
                         const char* what) {
  if (a.size() != b.size())
    throw ValidationError(std::string(what) + " has " +
                          std::to_string(b.size()) + " entries, expected " +
                          std::to_string(a.size()));
}

void require_normalized(std::span<const double> overlaps, const char* what) {
  double norm = 0.0;
  for (double x : overlaps) {
    if (!std::isfinite(x))
      throw ValidationError(std::string(what) + " contains a non-finite value");
    norm += x * x;
  }
  if (std::fabs(norm - 1.0) > kNormalizationTolerance)
    throw ValidationError(std::string(what) + " are not normalized: sum of "
                          "squares is " + std::to_string(norm));
}

// kBreakdownFloor relative to the spectral scale sum(e_k^2) / N.
double squared_floor(std::span<const double> eigenvalues) {
  double scale = 0.0;
  for (double e : eigenvalues) {
    if (!std::isfinite(e))
      throw ValidationError("eigenvalues contain a non-finite value");
    scale += e * e;
  }
  return kBreakdownFloor * scale / static_cast<double>(eigenvalues.size());
}

bool below_floor(double squared, double floor) {
  return !(squared > floor);
}

// The recursion runs in extended precision: c_1^2 and c_1^2 + eps^2 d_1^2
// differ only in the last digits of a double when eps is small.
using Real = long double;

Real sum_of_squares(const std::vector<Real>& v) {
  Real s = 0.0;
  for (Real x : v) s += x * x;
  return s;
}

}  // namespace

namespace {

std::vector<Real> widen(std::span<const double> value,
                        std::span<const double> tail) {
  std::vector<Real> out(value.begin(), value.end());
  for (std::size_t i = 0; i < tail.size() && i < out.size(); ++i) out[i] += tail[i];
  return out;
}

void check_nearest_inputs(std::span<const double> eigenvalues,
                          std::span<const double> site1_overlaps,
                          std::size_t max_terms) {
  const std::size_t n = eigenvalues.size();
  if (n == 0) throw ValidationError("empty spectrum");
  require_same_length(eigenvalues, site1_overlaps, "site-1 overlaps");
  if (max_terms > n - 1)
    throw ValidationError("max_terms " + std::to_string(max_terms) +
                          " exceeds the " + std::to_string(n - 1) +
                          " couplings of an " + std::to_string(n) +
                          "-site chain");
  require_normalized(site1_overlaps, "site-1 overlaps");
}

void check_next_nearest_inputs(std::span<const double> eigenvalues,
                               std::span<const double> site1_overlaps,
                               std::span<const double> site2_overlaps,
                               double epsilon) {
  if (eigenvalues.size() < 2) throw ValidationError("need at least two sites");
  require_same_length(eigenvalues, site1_overlaps, "site-1 overlaps");
  require_same_length(eigenvalues, site2_overlaps, "site-2 overlaps");
  if (!std::isfinite(epsilon) || epsilon < 0.0)
    throw ValidationError("perturbation strength must be >= 0");
  if (epsilon == 0.0)
    throw ValidationError(
        "next-nearest reconstruction divides by eps*d_n and needs eps > 0; "
        "use the nearest-neighbour scheme for eps = 0");
  require_normalized(site1_overlaps, "site-1 overlaps");
  require_normalized(site2_overlaps, "site-2 overlaps");
}

ReconstructionResult nearest_recursion(const std::vector<Real>& eigenvalues,
                                       const std::vector<Real>& site1,
                                       std::size_t max_terms, double floor) {
  const std::size_t n = eigenvalues.size();
  ReconstructionResult out;
  out.estimated.reserve(max_terms);
  for (Real x : site1) out.estimated_overlaps.push_back(static_cast<double>(x));

  // <n-1|e_k>_eps, <n|e_k>_eps and c_{n-1}^eps; the row before site 1 is 0.
  std::vector<Real> previous(n, 0.0);
  std::vector<Real> current = site1;
  Real previous_coupling = 0.0;
  std::vector<Real> residual(n);

  for (std::size_t term = 1; term <= max_terms; ++term) {
    for (std::size_t k = 0; k < n; ++k)
      residual[k] = eigenvalues[k] * current[k] - previous_coupling * previous[k];
    const Real squared = sum_of_squares(residual);
    if (below_floor(static_cast<double>(squared), floor)) {
      out.breakdown_at = term;
      break;
    }
    const Real coupling = std::sqrt(squared);
    const double rounded = static_cast<double>(coupling);
    out.estimated.push_back(rounded);
    out.estimated_tail.push_back(static_cast<double>(coupling - rounded));
    for (std::size_t k = 0; k < n; ++k) residual[k] /= coupling;
    for (Real x : residual)
      out.estimated_overlaps.push_back(static_cast<double>(x));
    previous.swap(current);
    current.swap(residual);
    previous_coupling = coupling;
  }
  return out;
}

ExtendedReconstructionResult next_nearest_recursion(
    const std::vector<Real>& eigenvalues, std::vector<Real> site1,
    std::vector<Real> site2, double epsilon, double floor) {
  const std::size_t n = eigenvalues.size();
  ExtendedReconstructionResult out;
  // rows[r] holds <r+1|e_k>; every row is kept because the residual at site
  // n reaches back to site n-2.
  std::vector<std::vector<Real>> rows;
  rows.push_back(std::move(site1));
  rows.push_back(std::move(site2));
  std::vector<Real> couplings;
  std::vector<Real> scaled_d;  // eps * d_n

  for (std::size_t site = 1; site + 1 <= n; ++site) {
    const std::vector<Real>& here = rows[site - 1];
    const std::vector<Real>& next = rows[site];
    Real coupling = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      coupling += eigenvalues[k] * here[k] * next[k];
    couplings.push_back(coupling);
    out.estimated_c.push_back(static_cast<double>(coupling));
    if (site + 2 > n) break;

    // e_k<n|e_k> - c_{n-1}<n-1|e_k> - c_n<n+1|e_k> - eps d_{n-2}<n-2|e_k>
    // equals eps d_n <n+2|e_k>.
    std::vector<Real> residual(n);
    for (std::size_t k = 0; k < n; ++k) {
      Real r = eigenvalues[k] * here[k] - coupling * next[k];
      if (site >= 2) r -= couplings[site - 2] * rows[site - 2][k];
      if (site >= 3) r -= scaled_d[site - 3] * rows[site - 3][k];
      residual[k] = r;
    }
    const Real squared = sum_of_squares(residual);
    if (below_floor(static_cast<double>(squared), floor)) {
      out.breakdown_at = site;
      break;
    }
    const Real ed = std::sqrt(squared);
    scaled_d.push_back(ed);
    out.estimated_d.push_back(static_cast<double>(ed / epsilon));
    for (Real& r : residual) r /= ed;
    rows.push_back(std::move(residual));
  }
  return out;
}

}  // namespace

ReconstructionResult reconstruct_nearest_neighbor(
    std::span<const double> eigenvalues, std::span<const double> site1_overlaps,
    std::size_t max_terms) {
  check_nearest_inputs(eigenvalues, site1_overlaps, max_terms);
  return nearest_recursion(widen(eigenvalues, {}), widen(site1_overlaps, {}),
                           max_terms, squared_floor(eigenvalues));
}

ReconstructionResult reconstruct_nearest_neighbor(const SpectralData& spectrum,
                                                  std::size_t max_terms) {
  const std::vector<double> w1 = site_overlaps(spectrum, 1);
  check_nearest_inputs(spectrum.eigenvalues, w1, max_terms);
  return nearest_recursion(
      widen(spectrum.eigenvalues, spectrum.eigenvalue_tails),
      widen(w1, site_overlap_tails(spectrum, 1)), max_terms,
      squared_floor(spectrum.eigenvalues));
}

ExtendedReconstructionResult reconstruct_next_nearest(
    std::span<const double> eigenvalues, std::span<const double> site1_overlaps,
    std::span<const double> site2_overlaps, double epsilon) {
  check_next_nearest_inputs(eigenvalues, site1_overlaps, site2_overlaps, epsilon);
  return next_nearest_recursion(widen(eigenvalues, {}), widen(site1_overlaps, {}),
                                widen(site2_overlaps, {}), epsilon,
                                squared_floor(eigenvalues));
}

ExtendedReconstructionResult reconstruct_next_nearest(
    const SpectralData& spectrum, double epsilon) {
  if (spectrum.dim < 2) throw ValidationError("need at least two sites");
  const std::vector<double> w1 = site_overlaps(spectrum, 1);
  const std::vector<double> w2 = site_overlaps(spectrum, 2);
  check_next_nearest_inputs(spectrum.eigenvalues, w1, w2, epsilon);
  return next_nearest_recursion(
      widen(spectrum.eigenvalues, spectrum.eigenvalue_tails),
      widen(w1, site_overlap_tails(spectrum, 1)),
      widen(w2, site_overlap_tails(spectrum, 2)), epsilon,
      squared_floor(spectrum.eigenvalues));
}

std::vector<double> estimation_errors(std::span<const double> true_couplings,
                                      std::span<const double> estimated,
                                      std::span<const double> tail) {
  if (estimated.size() > true_couplings.size())
    throw ValidationError("estimated " + std::to_string(estimated.size()) +
                          " couplings but only " +
                          std::to_string(true_couplings.size()) +
                          " true couplings were given");
  if (!tail.empty()) require_same_length(estimated, tail, "estimate tail");
  std::vector<double> delta(estimated.size());
  for (std::size_t i = 0; i < estimated.size(); ++i) {
    Real est = estimated[i];
    if (!tail.empty()) est += tail[i];
    const Real truth = true_couplings[i];
    delta[i] = static_cast<double>(std::sqrt(std::fabs(est * est - truth * truth)));
  }
  return delta;
}

std::vector<double> estimation_errors(std::span<const double> true_couplings,
                                      std::span<const double> estimated) {
  return estimation_errors(true_couplings, estimated, {});
}

void attach_errors(ReconstructionResult& result,
                   std::span<const double> true_couplings) {
  result.errors_delta = estimation_errors(true_couplings, result.estimated,
                                         result.estimated_tail);
}

}  // namespace hopest
