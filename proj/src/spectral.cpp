// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hopest/errors.hpp"
#include "hopest/model.hpp"

namespace hopest {

namespace {

// Per-eigenvalue QL iteration budget.
constexpr int kMaxQlIterations = 60;

// Working precision. Extended precision keeps eigenvectors accurate to the
// last bit of the double results, which matters because the reconstruction
// subtracts squared couplings that agree to within eps^2.
using Real = long double;

// Row-major square scratch matrix.
class Square {
 public:
  explicit Square(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  Real& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  std::vector<Real>& data() { return a_; }

 private:
  std::size_t n_;
  std::vector<Real> a_;
};

// Householder reduction to tridiagonal form. On return d holds the diagonal,
// e[1..n-1] the subdiagonal and v the accumulated orthogonal transform.
// Follows the Algol tred2 of Bowdler, Martin, Reinsch and Wilkinson.
void tridiagonalize(std::size_t n, Square& v, std::vector<Real>& d,
                    std::vector<Real>& e) {
  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    Real scale = 0.0;
    Real h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::fabs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      Real f = d[i - 1];
      Real g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k + 1 <= i; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const Real hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k + 1 <= i; ++k)
          v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const Real h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        Real g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating v along.
void ql_implicit(std::size_t n, Square& v, std::vector<Real>& d,
                 std::vector<Real>& e) {
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  Real f = 0.0;
  Real tst1 = 0.0;
  constexpr Real eps = std::numeric_limits<Real>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::fabs(d[l]) + std::fabs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::fabs(e[m]) > eps * tst1) ++m;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations)
          throw ConvergenceError("QL iteration did not converge for eigenvalue " +
                                 std::to_string(l + 1) + " after " +
                                 std::to_string(kMaxQlIterations) +
                                 " sweeps");
        Real g = d[l];
        Real p = (d[l + 1] - g) / (2.0 * e[l]);
        Real r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const Real dl1 = d[l + 1];
        Real h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        Real c = 1.0;
        Real c2 = c;
        Real c3 = c;
        const Real el1 = e[l + 1];
        Real s = 0.0;
        Real s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (std::size_t k = 0; k < n; ++k) {
            h = v(k, i + 1);
            v(k, i + 1) = s * v(k, i) + c * h;
            v(k, i) = c * v(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::fabs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

SpectralData eigendecompose(std::size_t dim, std::span<const double> entries) {
  if (dim == 0) throw ValidationError("cannot diagonalize an empty matrix");
  if (entries.size() != dim * dim)
    throw ValidationError("expected " + std::to_string(dim * dim) +
                          " matrix entries, got " +
                          std::to_string(entries.size()));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const double x = entries[r * dim + c];
      if (!std::isfinite(x))
        throw ValidationError("non-finite matrix entry at (" +
                              std::to_string(r + 1) + ", " +
                              std::to_string(c + 1) + ")");
      if (x != entries[c * dim + r])
        throw ValidationError("matrix is not symmetric at (" +
                              std::to_string(r + 1) + ", " +
                              std::to_string(c + 1) + ")");
    }

  Square v(dim);
  std::copy(entries.begin(), entries.end(), v.data().begin());
  std::vector<Real> d(dim, 0.0);
  std::vector<Real> e(dim, 0.0);
  if (dim == 1) {
    d[0] = entries[0];
    v(0, 0) = 1.0;
  } else {
    tridiagonalize(dim, v, d, e);
    ql_implicit(dim, v, d, e);
  }

  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  SpectralData out;
  out.dim = dim;
  out.eigenvalues.resize(dim);
  out.eigenvectors.assign(dim * dim, 0.0);
  out.eigenvalue_tails.resize(dim);
  out.eigenvector_tails.assign(dim * dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = static_cast<double>(d[src]);
    out.eigenvalue_tails[k] = static_cast<double>(d[src] - out.eigenvalues[k]);
    std::vector<double> column(dim);
    for (std::size_t r = 0; r < dim; ++r) column[r] = static_cast<double>(v(r, src));
    std::size_t lead = 0;
    for (std::size_t r = 1; r < dim; ++r)
      if (std::fabs(column[r]) > std::fabs(column[lead])) lead = r;
    const double sign = column[lead] < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < dim; ++r) {
      out.eigenvectors[r * dim + k] = sign * column[r] + 0.0;
      out.eigenvector_tails[r * dim + k] =
          sign * static_cast<double>(v(r, src) - column[r]) + 0.0;
    }
  }
  for (std::size_t k = 1; k < dim; ++k)
    if (out.eigenvalues[k] - out.eigenvalues[k - 1] < kDegeneracyGap)
      out.near_degenerate = true;
  return out;
}

SpectralData eigendecompose(const HamiltonianMatrix& h) {
  return eigendecompose(h.dim(), h.entries());
}

std::vector<double> site_overlaps(const SpectralData& s, std::size_t site) {
  if (site < 1 || site > s.dim)
    throw ValidationError("site " + std::to_string(site) + " outside 1.." +
                          std::to_string(s.dim));
  return {s.eigenvectors.begin() + static_cast<std::ptrdiff_t>((site - 1) * s.dim),
          s.eigenvectors.begin() + static_cast<std::ptrdiff_t>(site * s.dim)};
}

std::vector<double> site_overlap_tails(const SpectralData& s, std::size_t site) {
  if (site < 1 || site > s.dim)
    throw ValidationError("site " + std::to_string(site) + " outside 1.." +
                          std::to_string(s.dim));
  if (s.eigenvector_tails.empty()) return std::vector<double>(s.dim, 0.0);
  const auto first = s.eigenvector_tails.begin() +
                     static_cast<std::ptrdiff_t>((site - 1) * s.dim);
  return {first, first + static_cast<std::ptrdiff_t>(s.dim)};
}

double moment(const SpectralData& s, std::size_t site, unsigned power) {
  const std::vector<double> row = site_overlaps(s, site);
  const std::vector<double> tail = site_overlap_tails(s, site);
  Real sum = 0.0;
  for (std::size_t k = 0; k < s.dim; ++k) {
    const Real w = static_cast<Real>(row[k]) + tail[k];
    Real e = s.eigenvalues[k];
    if (!s.eigenvalue_tails.empty()) e += s.eigenvalue_tails[k];
    Real term = w * w;
    for (unsigned p = 0; p < power; ++p) term *= e;
    sum += term;
  }
  return static_cast<double>(sum);
}

}  // namespace hopest
