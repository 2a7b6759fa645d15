// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace qetlab {

// Raised when a numerical routine cannot deliver its contract (eigensolver
// non-convergence, survival-probability collapse, loss of branch purity).
// Input-contract violations use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qetlab
