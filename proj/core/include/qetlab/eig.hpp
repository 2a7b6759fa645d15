// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qetlab/complex_matrix.hpp"

namespace qetlab {

struct EigenDecomposition {
  // Ascending eigenvalues; column k of `eigenvectors` belongs to
  // eigenvalues[k].  Columns are orthonormal; within a degenerate cluster
  // they are re-orthonormalized in index order, and every column's global
  // phase makes its first non-negligible entry real and non-negative.
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexVector eigenvector(std::size_t k) const;
};

// Cyclic complex Jacobi rotations for Hermitian matrices of dimension 2..8.
// Deterministic: no randomness, fixed sweep order, off-diagonal Frobenius
// threshold 1e-14 * (1 + |A|_F), sweep cap 100.  Throws std::invalid_argument
// for non-Hermitian input and NumericalError if the cap is hit unconverged.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

struct PsdResult {
  bool is_psd;
  double min_eigenvalue;
};

// Positive semidefiniteness with a relative floor: verdict is
// min_eigenvalue >= -tol * (1 + |m|_F).
PsdResult is_psd(const ComplexMatrix& m, double tol = 1e-9);

// exp(-i * H * t) for Hermitian H; the result is unitary within 1e-12.
ComplexMatrix evolution_unitary(const ComplexMatrix& hamiltonian, double t);

}  // namespace qetlab
