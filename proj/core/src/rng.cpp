// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/rng.hpp"

#include <cmath>
#include <numbers>

#include "qetlab/eig.hpp"

namespace qetlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(angle);
  has_cached_ = true;
  return r * std::cos(angle);
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex v(rng.gaussian() / std::numbers::sqrt2,
                      rng.gaussian() / std::numbers::sqrt2);
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  return evolution_unitary(random_hermitian(dim, rng), 1.0);
}

ComplexMatrix random_density_matrix(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real(), 0.0);
  return rho;
}

ComplexVector random_state_vector(std::size_t dim, Rng& rng) {
  ComplexVector v(dim);
  for (Complex& x : v) x = Complex(rng.gaussian(), rng.gaussian());
  return normalized(v);
}

}  // namespace qetlab
