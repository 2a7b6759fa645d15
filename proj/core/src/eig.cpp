// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qetlab/errors.hpp"

namespace qetlab {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.dim(); ++p) {
    for (std::size_t q = p + 1; q < a.dim(); ++q) {
      s += std::norm(a(p, q)) + std::norm(a(q, p));
    }
  }
  return std::sqrt(s);
}

// One Jacobi rotation zeroing A(p, q).  For the Hermitian 2x2 block
// [[a, r e^{i alpha}], [r e^{-i alpha}, b]] the rotation
//   J(p,p) = c, J(p,q) = s e^{i alpha}, J(q,p) = -s e^{-i alpha}, J(q,q) = c
// with t the smaller root of t^2 + 2 tau t - 1 = 0, tau = (b - a) / (2 r),
// annihilates the off-diagonal pair under A <- J^dag A J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r < 1e-300) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpq = s * phase;
  const Complex jqp = -s * std::conj(phase);

  const std::size_t n = a.dim();
  // Column update: A <- A J.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  // Row update: A <- J^dag A.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  // Accumulate eigenvectors: V <- V J.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

void fix_column_phase(ComplexMatrix& v, std::size_t col) {
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const double mag = std::abs(v(k, col));
    if (mag > 1e-12) {
      const Complex phase = std::conj(v(k, col)) / mag;
      for (std::size_t i = 0; i < v.dim(); ++i) v(i, col) *= phase;
      return;
    }
  }
}

// Deterministic re-orthonormalization of columns [first, last) in index
// order (modified Gram-Schmidt).  Jacobi already returns orthonormal
// columns; this pins the representative basis inside degenerate clusters.
void orthonormalize_block(ComplexMatrix& v, std::size_t first,
                          std::size_t last) {
  const std::size_t n = v.dim();
  for (std::size_t j = first; j < last; ++j) {
    for (std::size_t i = first; i < j; ++i) {
      Complex proj = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        proj += std::conj(v(k, i)) * v(k, j);
      }
      for (std::size_t k = 0; k < n; ++k) v(k, j) -= proj * v(k, i);
    }
    double nn = 0.0;
    for (std::size_t k = 0; k < n; ++k) nn += std::norm(v(k, j));
    nn = std::sqrt(nn);
    if (nn < 1e-12) {
      throw NumericalError("degenerate eigenvector cluster collapsed");
    }
    for (std::size_t k = 0; k < n; ++k) v(k, j) /= nn;
  }
}

}  // namespace

ComplexVector EigenDecomposition::eigenvector(std::size_t k) const {
  ComplexVector v(eigenvectors.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
  return v;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_hermitian()) {
    throw std::invalid_argument("eig_hermitian requires a Hermitian matrix");
  }
  const std::size_t n = m.dim();
  const double scale = 1.0 + m.frobenius_norm();
  const double stop = 1e-14 * scale;

  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = off_diagonal_norm(a) <= stop;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
    for (std::size_t k = 0; k < n; ++k) a(k, k) = Complex(a(k, k).real(), 0.0);
    converged = off_diagonal_norm(a) <= stop;
  }
  if (!converged) {
    throw NumericalError("Jacobi eigensolver did not converge in 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, j) = v(i, order[j]);
    }
  }

  const double cluster_tol = 1e-8 * scale;
  std::size_t first = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == n ||
        out.eigenvalues[j] - out.eigenvalues[j - 1] > cluster_tol) {
      if (j - first > 1) orthonormalize_block(out.eigenvectors, first, j);
      first = j;
    }
  }
  for (std::size_t j = 0; j < n; ++j) fix_column_phase(out.eigenvectors, j);
  return out;
}

PsdResult is_psd(const ComplexMatrix& m, double tol) {
  const EigenDecomposition d = eig_hermitian(m);
  const double lambda_min = d.eigenvalues.front();
  return {lambda_min >= -tol * (1.0 + m.frobenius_norm()), lambda_min};
}

ComplexMatrix evolution_unitary(const ComplexMatrix& hamiltonian, double t) {
  const EigenDecomposition d = eig_hermitian(hamiltonian);
  const std::size_t n = hamiltonian.dim();
  ComplexMatrix u(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::exp(Complex(0.0, -d.eigenvalues[k] * t));
        s += d.eigenvectors(i, k) * phase * std::conj(d.eigenvectors(j, k));
      }
      u(i, j) = s;
    }
  }
  return u;
}

}  // namespace qetlab
