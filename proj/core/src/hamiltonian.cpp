// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "qetlab/eig.hpp"

namespace qetlab {

namespace {

void require_spin_params(double h, double kappa) {
  if (!(h > 0.0) || !(kappa > 0.0)) {
    throw std::invalid_argument("spin models require h > 0 and kappa > 0");
  }
}

ComplexVector ket0() { return {Complex(1.0, 0.0), Complex(0.0, 0.0)}; }
ComplexVector ket1() { return {Complex(0.0, 0.0), Complex(1.0, 0.0)}; }

}  // namespace

Hamiltonian build_original(double h, double kappa) {
  require_spin_params(h, kappa);
  ComplexMatrix m = ComplexMatrix::zero(4);
  m(0, 0) = Complex(-2.0 * h, 0.0);
  m(3, 3) = Complex(2.0 * h, 0.0);
  const Complex c(2.0 * kappa, 0.0);
  m(0, 3) = c;
  m(1, 2) = c;
  m(2, 1) = c;
  m(3, 0) = c;
  Hamiltonian result;
  result.matrix = m;
  result.params.model = Model::Original;
  result.params.h = h;
  result.params.kappa = kappa;
  return result;
}

Hamiltonian build_flipflop(double h, double kappa) {
  require_spin_params(h, kappa);
  ComplexMatrix m = ComplexMatrix::zero(4);
  m(0, 0) = Complex(-2.0 * h, 0.0);
  m(3, 3) = Complex(2.0 * h, 0.0);
  const Complex c(2.0 * kappa, 0.0);
  m(1, 2) = c;
  m(2, 1) = c;
  Hamiltonian result;
  result.matrix = m;
  result.params.model = Model::FlipFlop;
  result.params.h = h;
  result.params.kappa = kappa;
  return result;
}

FamilyBasis family_basis(double alpha, double beta) {
  FamilyBasis basis;
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  basis.phi = {Complex(ca, 0.0), Complex(sa, 0.0)};
  basis.phi_perp = {Complex(sa, 0.0), Complex(-ca, 0.0)};

  // |+> and |-> combinations: psi = cos(beta)|+> + sin(beta)|->.
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  basis.psi = {Complex((cb + sb) * inv_sqrt2, 0.0),
               Complex((cb - sb) * inv_sqrt2, 0.0)};
  basis.psi_perp = {Complex((sb - cb) * inv_sqrt2, 0.0),
                    Complex((sb + cb) * inv_sqrt2, 0.0)};

  basis.v[0] = kron(basis.psi, basis.phi_perp);
  basis.v[1] = kron(ket0(), basis.phi);
  basis.v[2] = kron(ket1(), basis.phi);
  basis.v[3] = kron(basis.psi_perp, basis.phi_perp);
  return basis;
}

Hamiltonian build_family_general(double alpha, double beta,
                                 const std::array<double, 4>& levels) {
  for (int i = 0; i + 1 < 4; ++i) {
    if (!(levels[i] < levels[i + 1])) {
      throw std::invalid_argument(
          "family energy levels must be strictly ascending");
    }
  }
  const FamilyBasis basis = family_basis(alpha, beta);
  ComplexMatrix m = ComplexMatrix::zero(4);
  for (int k = 0; k < 4; ++k) {
    m += outer(basis.v[k], basis.v[k]) * Complex(levels[k], 0.0);
  }
  Hamiltonian result;
  result.matrix = m;
  result.params.model = Model::Family;
  result.params.alpha = alpha;
  result.params.beta = beta;
  result.params.big_e = levels[3];
  result.params.big_f = levels[2];
  return result;
}

Hamiltonian build_family(double alpha, double beta, double big_e,
                         double big_f) {
  if (!(big_f > 0.0) || !(big_e > big_f)) {
    throw std::invalid_argument("family model requires E > F > 0");
  }
  return build_family_general(alpha, beta,
                              {-big_e, -big_f, big_f, big_e});
}

Hamiltonian build_hamiltonian(const ModelParams& params) {
  switch (params.model) {
    case Model::Original:
      return build_original(params.h, params.kappa);
    case Model::FlipFlop:
      return build_flipflop(params.h, params.kappa);
    case Model::Family:
      return build_family(params.alpha, params.beta, params.big_e,
                          params.big_f);
  }
  throw std::invalid_argument("unknown model");
}

MixingAngles mixing_angles(double h, double kappa) {
  require_spin_params(h, kappa);
  MixingAngles angles;
  angles.theta = 0.5 * std::atan2(kappa, h);
  angles.phi = 0.5 * std::atan2(2.0 * kappa, h);
  return angles;
}

std::vector<double> spectrum(const Hamiltonian& hamiltonian) {
  return eig_hermitian(hamiltonian.matrix).eigenvalues;
}

ComplexVector ground_state(const Hamiltonian& hamiltonian) {
  const ModelParams& p = hamiltonian.params;
  if (p.model == Model::FlipFlop &&
      std::abs(p.kappa - p.h) < 1e-12 * (p.h + p.kappa)) {
    throw std::invalid_argument(
        "flip-flop ground level is degenerate at kappa == h");
  }
  const EigenDecomposition decomposition = eig_hermitian(hamiltonian.matrix);
  return phase_fixed(decomposition.eigenvector(0));
}

}  // namespace qetlab
