// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qetlab {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (n == 0) {
    throw std::invalid_argument("nelder_mead requires at least one dimension");
  }

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += options.initial_step;
  }
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = objective(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult result;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return values[a] < values[b];
                     });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    result.iterations = iter;
    // Convergence: value spread and simplex diameter both small.
    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      diameter = std::max(diameter, distance(simplex[i], simplex[best]));
    }
    const double spread = values[worst] - values[best];
    const double best_norm =
        distance(simplex[best], std::vector<double>(n, 0.0));
    if (spread <= options.f_tolerance * (1.0 + std::abs(values[best])) &&
        diameter <= options.x_tolerance * (1.0 + best_norm)) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = centroid[k] + coeff * (centroid[k] - simplex[worst][k]);
      }
      return x;
    };

    const std::vector<double> reflected = blend(kReflect);
    const double f_reflected = objective(reflected);

    if (f_reflected < values[best]) {
      const std::vector<double> expanded = blend(kExpand);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    if (f_reflected < values[worst]) {
      // Outside contraction.
      const std::vector<double> contracted = blend(kContract);
      const double f_contracted = objective(contracted);
      if (f_contracted <= f_reflected) {
        simplex[worst] = contracted;
        values[worst] = f_contracted;
        continue;
      }
    } else {
      // Inside contraction.
      const std::vector<double> contracted = blend(-kContract);
      const double f_contracted = objective(contracted);
      if (f_contracted < values[worst]) {
        simplex[worst] = contracted;
        values[worst] = f_contracted;
        continue;
      }
    }

    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) {
        simplex[i][k] =
            simplex[best][k] + kShrink * (simplex[i][k] - simplex[best][k]);
      }
      values[i] = objective(simplex[i]);
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (values[i] < values[best]) best = i;
  }
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace qetlab
