// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/state.hpp"

#include <cmath>
#include <stdexcept>

#include "qetlab/eig.hpp"
#include "qetlab/errors.hpp"

namespace qetlab {

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const ComplexVector v = normalized(psi);
  return DensityMatrix(outer(v, v));
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, double tol) {
  if (!m.is_hermitian()) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > 1e-9) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  const PsdResult p = is_psd(m, tol);
  if (!p.is_psd) {
    throw std::invalid_argument("density matrix must be positive semidefinite");
  }
  return DensityMatrix(m);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const EigenDecomposition d =
      eig_hermitian(rho.matrix() - sigma.matrix());
  double s = 0.0;
  for (double lambda : d.eigenvalues) s += std::abs(lambda);
  return 0.5 * s;
}

double real_expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  const Complex t = (rho.matrix() * op).trace();
  if (std::abs(t.imag()) > 1e-10 * (1.0 + op.frobenius_norm())) {
    throw NumericalError("expectation value has a non-negligible imaginary part");
  }
  return t.real();
}

}  // namespace qetlab
