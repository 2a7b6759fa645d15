// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "qetlab/complex_matrix.hpp"

namespace qetlab {

// SplitMix64 mixing step; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic child seed for stream `index` of a base seed.  Distinct
// indices give decorrelated seeds; the mapping is stable across platforms.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Seedable deterministic generator.  Both the uniform and Gaussian variates
// are produced by fixed arithmetic on the raw 64-bit stream, so sequences
// are bit-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (second variate cached).
  double gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// Test-instance factories.  All are pure functions of the generator state.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);   // Gaussian entries
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);     // exp(-iA) dressing
ComplexMatrix random_density_matrix(std::size_t dim, Rng& rng);  // Ginibre
ComplexVector random_state_vector(std::size_t dim, Rng& rng);

}  // namespace qetlab
