// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qetlab/complex_matrix.hpp"

namespace qetlab {

// Validated density matrix: Hermitian, unit trace, positive semidefinite
// (within documented relative tolerances).  Construction goes through the
// factories so every instance in the system is a physical state.
class DensityMatrix {
 public:
  // |psi><psi| for a (normalized on entry) state vector.
  static DensityMatrix pure(const ComplexVector& psi);

  // Validates Hermiticity within 1e-12*(1+|m|_F), |trace - 1| <= 1e-9 and
  // eigenvalue floor -tol*(1+|m|_F); throws std::invalid_argument otherwise.
  static DensityMatrix from_matrix(const ComplexMatrix& m, double tol = 1e-9);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

// (1/2) * trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Re Tr(rho * op); throws NumericalError if the imaginary part exceeds
// 1e-10 * (1 + |op|_F), which indicates a non-Hermitian observable.
double real_expectation(const DensityMatrix& rho, const ComplexMatrix& op);

}  // namespace qetlab
