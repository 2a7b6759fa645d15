// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Two-qubit model Hamiltonians used throughout the library.
//
// Conventions (fixed everywhere in qetlab):
//   * Alice is the most significant qubit: basis index = 2a + b.
//   * Kronecker products are big-endian: kron(A, B) acts as A on Alice and
//     B on Bob.
//
// Models:
//   * Original:  H = -h Z(x)I - h I(x)Z + 2k X(x)X          (h > 0, k > 0)
//   * FlipFlop:  H = -h Z(x)I - h I(x)Z + k (X(x)X + Y(x)Y) (h > 0, k > 0)
//   * Family:    a four-level parametric model with eigenbasis built from
//     single-qubit states |phi>, |psi> and spectrum {-E, -F, +F, +E}.

#pragma once

#include <array>
#include <vector>

#include "qetlab/complex_matrix.hpp"

namespace qetlab {

enum class Model {
  Original,
  FlipFlop,
  Family,
};

// Parameters for building a model Hamiltonian. Fields not used by the
// selected model are ignored (e.g. alpha/beta for Original).
struct ModelParams {
  Model model = Model::Original;
  double h = 1.0;        // local field strength (Original, FlipFlop)
  double kappa = 1.5;    // coupling strength (Original, FlipFlop)
  double alpha = 0.0;    // Bob-side basis angle (Family)
  double beta = 0.0;     // Alice-side basis angle (Family)
  double big_e = 2.0;    // outer energy level E (Family), requires E > F
  double big_f = 1.0;    // inner energy level F (Family), requires F > 0
};

struct Hamiltonian {
  ComplexMatrix matrix;  // 4x4 Hermitian
  ModelParams params;
};

// Mixing angles of the Original model:
//   theta: ground state |g> = cos(theta)|00> - sin(theta)|11>,
//          with tan(2 theta) = kappa / h.
//   phi:   conditional-rotation angle with tan(2 phi) = 2 kappa / h.
struct MixingAngles {
  double theta = 0.0;
  double phi = 0.0;
};

// Orthonormal eigenbasis data of the Family model.
// phi/phi_perp live on Bob, psi/psi_perp on Alice. The four two-qubit
// eigenvectors, in ascending-energy order {-E, -F, +F, +E}, are
//   v[0] = psi (x) phi_perp
//   v[1] = |0>  (x) phi
//   v[2] = |1>  (x) phi
//   v[3] = psi_perp (x) phi_perp
struct FamilyBasis {
  ComplexVector phi;
  ComplexVector phi_perp;
  ComplexVector psi;
  ComplexVector psi_perp;
  std::array<ComplexVector, 4> v;
};

// Builders. All throw std::invalid_argument on out-of-domain parameters
// (h <= 0 or kappa <= 0 for the spin models; E <= F or F <= 0 for the
// family builders; non-ascending level lists for the general builder).
Hamiltonian build_original(double h, double kappa);
Hamiltonian build_flipflop(double h, double kappa);
Hamiltonian build_family(double alpha, double beta, double big_e,
                         double big_f);
// Same eigenbasis as build_family but with four arbitrary strictly
// ascending energy levels.
Hamiltonian build_family_general(double alpha, double beta,
                                 const std::array<double, 4>& levels);
Hamiltonian build_hamiltonian(const ModelParams& params);

// Single-qubit / product-basis data for the Family model.
FamilyBasis family_basis(double alpha, double beta);

// Mixing angles for an Original model with the given parameters.
MixingAngles mixing_angles(double h, double kappa);

// Eigenvalues of the Hamiltonian, ascending.
std::vector<double> spectrum(const Hamiltonian& hamiltonian);

// Normalized ground-state vector (global phase fixed so the first
// sizable component is real and positive). Throws std::invalid_argument
// when the ground level is degenerate (FlipFlop with kappa == h).
ComplexVector ground_state(const Hamiltonian& hamiltonian);

}  // namespace qetlab
