// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qetlab {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Relative tolerance used everywhere a Hermitian input is required: a matrix
// A passes when max_ij |A(i,j) - conj(A(j,i))| <= kHermitianTol * (1 + |A|_F).
inline constexpr double kHermitianTol = 1e-12;

// Dense, row-major, square complex matrix sized for few-qubit workloads
// (dimensions 2 through 8).  Values are immutable after construction in all
// public pipelines; the mutable element access exists for builders.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix zero(std::size_t dim);
  static ComplexMatrix identity(std::size_t dim);
  // Row-major construction; every row must have the same length.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;
  // Largest entry magnitude of A - A^dagger.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) {
    rhs *= scalar;
    return rhs;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

// (A + A^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Largest entry magnitude of A - B.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Tensor product with the big-endian convention: the composite index of
// A (x) B is dim(B) * i_A + i_B, i.e. the left factor is most significant.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

// Partial trace / partial transpose over one factor of a tensor product.
// `dims` lists the factor dimensions, most significant first, and must
// multiply to m.dim().  Both are exact entry reorderings/sums.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t subsystem,
                            const std::vector<std::size_t>& dims);
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t subsystem,
                                const std::vector<std::size_t>& dims);

// Vector helpers.
ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);  // u v^dag
ComplexVector matvec(const ComplexMatrix& m, const ComplexVector& v);
Complex inner(const ComplexVector& u, const ComplexVector& v);  // <u|v>
double norm(const ComplexVector& v);
ComplexVector normalized(const ComplexVector& v);
// Multiply by the global phase that makes the first entry with magnitude
// above 1e-12 real and non-negative.
ComplexVector phase_fixed(const ComplexVector& v);

// Single-qubit constants.
ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qetlab
