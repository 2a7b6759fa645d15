// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

namespace qetlab {

struct NelderMeadOptions {
  int max_iterations = 2000;
  double initial_step = 0.5;   // simplex edge length along each axis
  double x_tolerance = 1e-10;  // simplex diameter stopping threshold
  double f_tolerance = 1e-12;  // value spread stopping threshold
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free simplex minimization with textbook coefficients
// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).  Deterministic
// for a fixed starting point.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace qetlab
