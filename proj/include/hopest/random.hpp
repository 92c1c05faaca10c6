// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace hopest {

/// Counter-based stream: draw i is a SplitMix64 finalizer applied to
/// key + (i + 1) * golden_gamma. Copies replay the same sequence, and
/// `fork` derives an independent keyed child without advancing the parent.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double next_unit();

  /// Uniform on [low, high]; never leaves the closed interval.
  double uniform(double low, double high);

  /// Unbiased integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  RandomStream fork(std::uint64_t tag) const;

  std::uint64_t key() const { return key_; }
  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z);

/// Stream for one (seed, instance, epsilon-grid index) cell of an ensemble.
RandomStream derive_instance_rng(std::uint64_t master_seed,
                                 std::uint64_t instance_index,
                                 std::uint64_t epsilon_index);

}  // namespace hopest
