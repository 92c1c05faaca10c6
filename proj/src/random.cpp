// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/random.hpp"

#include "hopest/errors.hpp"

#include <algorithm>

namespace hopest {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + kGamma + (h << 6) + (h >> 2)));
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t RandomStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

double RandomStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double low, double high) {
  return std::min(high, low + (high - low) * next_unit());
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("below() needs a positive bound");
  // Reject the short tail so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % bound;
  }
}

RandomStream RandomStream::fork(std::uint64_t tag) const {
  return RandomStream(combine(key_, tag ^ 0xD1B54A32D192ED03ULL));
}

RandomStream derive_instance_rng(std::uint64_t master_seed,
                                 std::uint64_t instance_index,
                                 std::uint64_t epsilon_index) {
  std::uint64_t key = mix64(master_seed ^ 0x243F6A8885A308D3ULL);
  key = combine(key, instance_index);
  key = combine(key, epsilon_index);
  return RandomStream(key);
}

}  // namespace hopest
