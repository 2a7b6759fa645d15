// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qetlab {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimensions do not match");
  }
}

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

void decompose(std::size_t flat, const std::vector<std::size_t>& dims,
               std::vector<std::size_t>& idx) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
}

std::size_t compose_without(const std::vector<std::size_t>& idx,
                            const std::vector<std::size_t>& dims,
                            std::size_t skip) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k == skip) continue;
    flat = flat * dims[k] + idx[k];
  }
  return flat;
}

std::size_t compose(const std::vector<std::size_t>& idx,
                    const std::vector<std::size_t>& dims) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    flat = flat * dims[k] + idx[k];
  }
  return flat;
}

void require_factorization(const ComplexMatrix& m, std::size_t subsystem,
                           const std::vector<std::size_t>& dims) {
  if (dims.empty() || subsystem >= dims.size()) {
    throw std::invalid_argument("subsystem index out of range");
  }
  if (product(dims) != m.dim()) {
    throw std::invalid_argument(
        "factor dimensions do not multiply to the matrix dimension");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {
  if (dim == 0 || dim > 8) {
    throw std::invalid_argument("matrix dimension must be in [1, 8]");
  }
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
  return ComplexMatrix(dim);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw std::invalid_argument("from_rows requires a square layout");
    }
    std::size_t j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out(i, j) = std::conj((*this)(j, i));
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(j, i);
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return d;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return hermiticity_defect() <= tol * (1.0 + frobenius_norm());
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      d = std::max(d, std::abs(a(i, j) - b(i, j)));
    }
  }
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t subsystem,
                            const std::vector<std::size_t>& dims) {
  require_factorization(m, subsystem, dims);
  const std::size_t out_dim = m.dim() / dims[subsystem];
  ComplexMatrix out(out_dim);
  std::vector<std::size_t> ri(dims.size());
  std::vector<std::size_t> ci(dims.size());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    decompose(r, dims, ri);
    for (std::size_t c = 0; c < m.dim(); ++c) {
      decompose(c, dims, ci);
      if (ri[subsystem] != ci[subsystem]) continue;
      out(compose_without(ri, dims, subsystem),
          compose_without(ci, dims, subsystem)) += m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t subsystem,
                                const std::vector<std::size_t>& dims) {
  require_factorization(m, subsystem, dims);
  ComplexMatrix out(m.dim());
  std::vector<std::size_t> ri(dims.size());
  std::vector<std::size_t> ci(dims.size());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    decompose(r, dims, ri);
    for (std::size_t c = 0; c < m.dim(); ++c) {
      decompose(c, dims, ci);
      std::swap(ri[subsystem], ci[subsystem]);
      const std::size_t rr = compose(ri, dims);
      const std::size_t cc = compose(ci, dims);
      std::swap(ri[subsystem], ci[subsystem]);
      out(rr, cc) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("outer product requires equal lengths");
  }
  ComplexMatrix out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      out(i, j) = u[i] * std::conj(v[j]);
    }
  }
  return out;
}

ComplexVector matvec(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.dim() != v.size()) {
    throw std::invalid_argument("matvec dimension mismatch");
  }
  ComplexVector out(v.size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("inner product requires equal lengths");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

ComplexVector normalized(const ComplexVector& v) {
  const double n = norm(v);
  if (n < 1e-12) {
    throw std::invalid_argument("cannot normalize a (near-)zero vector");
  }
  ComplexVector out = v;
  for (Complex& x : out) x /= n;
  return out;
}

ComplexVector phase_fixed(const ComplexVector& v) {
  for (const Complex& x : v) {
    const double a = std::abs(x);
    if (a > 1e-12) {
      const Complex phase = std::conj(x) / a;
      ComplexVector out = v;
      for (Complex& y : out) y *= phase;
      return out;
    }
  }
  return v;
}

ComplexMatrix pauli_i() { return ComplexMatrix::identity(2); }

ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows(
      {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

}  // namespace qetlab
