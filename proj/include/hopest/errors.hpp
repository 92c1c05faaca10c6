// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hopest {

/// Raised when an input violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numerical routine exhausts its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a request is well-formed but exceeds a supported size, e.g. an
/// exponential search above its cap.
class UnsupportedSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace hopest
