// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Gate-level density-matrix simulation of the two-qubit QET circuits:
// the dynamic variant (mid-circuit X measurement, classically conditioned
// rotations) and the deferred variant (quantum-controlled rotations with
// the measurement delayed to the end), plus Pauli-observable shot sampling
// and the Bob-energy estimator.
//
// Qubit 0 is Alice (most significant), qubit 1 is Bob.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qetlab/complex_matrix.hpp"

namespace qetlab {

enum class GateKind { Hadamard, PauliX, RotateY, ControlledU, Measure };
enum class MeasureBasis { X, Z };
enum class CircuitMode { Dynamic, Deferred };

// RY(lambda) = exp(-i lambda Y / 2) =
//   [[cos(lambda/2), -sin(lambda/2)], [sin(lambda/2), cos(lambda/2)]].
ComplexMatrix ry(double angle);

// The Hadamard matrix.
ComplexMatrix hadamard_matrix();

struct Gate {
  GateKind kind = GateKind::Hadamard;
  int target = 0;
  double angle = 0.0;                    // RotateY only
  int control = 0;                       // ControlledU only
  int control_value = 0;                 // ControlledU only
  ComplexMatrix unitary;                 // ControlledU payload, 2x2
  MeasureBasis basis = MeasureBasis::Z;  // Measure only

  // Factories validate their inputs (indices in {0,1}, finite angle,
  // unitary payload, control != target) with std::invalid_argument.
  static Gate hadamard(int target);
  static Gate pauli_x_gate(int target);
  static Gate rotate_y(int target, double angle);
  static Gate controlled(int control, int control_value, int target,
                         const ComplexMatrix& unitary);
  static Gate measure(int target, MeasureBasis basis);
};

struct Circuit {
  CircuitMode mode = CircuitMode::Dynamic;
  std::vector<Gate> gates;
};

// One classical branch of a simulation: the running density matrix, the
// branch probability, and the measurement outcomes recorded so far
// (per-qubit latest outcome; -1 means unmeasured).
struct CircuitBranch {
  double probability = 1.0;
  ComplexMatrix state;
  std::vector<int> outcomes;
  std::array<int, 2> last_outcome = {-1, -1};
};

struct BranchEnsemble {
  std::vector<CircuitBranch> branches;

  // sum_i p_i * state_i.
  ComplexMatrix final_mixture() const;
};

// Unitary action of a non-measurement gate on a 4x4 density matrix.
// For ControlledU this is the fully quantum controlled gate
// P_{cv} (x) U + P_{1-cv} (x) I (factors ordered by qubit index).
// Throws std::invalid_argument for Measure gates (those branch; see
// simulate / apply_measurement).
ComplexMatrix apply_gate(const ComplexMatrix& rho, const Gate& gate);

// Projective branches of a measurement gate. Outcome 0 is |0> (Z basis)
// or |+> (X basis); outcome 1 is |1> or |->. X-basis measurement is the
// von Neumann projection onto |+->: on hardware it is realized by a basis
// rotation, a computational-basis readout, and the rotation back, which
// leaves exactly these post states.
struct MeasurementOutcome {
  int outcome = 0;
  double probability = 0.0;
  ComplexMatrix state;
};
std::vector<MeasurementOutcome> apply_measurement(const ComplexMatrix& rho,
                                                  const Gate& gate);

// Runs the circuit on `initial` (4x4 density matrix), splitting branches
// at measurements and dropping branches with probability < 1e-14.
// Mode contracts, validated up front:
//   * Dynamic: every ControlledU's control qubit must already be measured
//     (the gate then acts classically on matching branches);
//   * Deferred: no measurement may precede a ControlledU (the gate acts
//     as the quantum controlled unitary).
BranchEnsemble simulate(const Circuit& circuit, const ComplexMatrix& initial);

// The protocol circuits for the flip-flop model at (h, kappa); the
// rotation angle is theta with tan(2 theta) = kappa/h. Initial state
// |00> needs no preparation gates. Throws for kappa == h (degenerate).
Circuit build_dynamic_circuit(double h, double kappa);
Circuit build_deferred_circuit(double h, double kappa);

// Same circuit shapes with arbitrary conditional unitaries injected
// (u_plus on outcome +/control 0, u_minus on outcome -/control 1).
Circuit build_dynamic_circuit(const ComplexMatrix& u_plus,
                              const ComplexMatrix& u_minus);
Circuit build_deferred_circuit(const ComplexMatrix& u_plus,
                               const ComplexMatrix& u_minus);

// Tr(rho * P) for a two-letter Pauli word over {I, X, Y, Z}; validates
// the word and that the trace is real (NumericalError otherwise).
double expectation(const ComplexMatrix& rho, const std::string& pauli_word);

struct ShotEstimate {
  std::string observable;
  int shots = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sqrt((1 - mean^2) / shots)
  std::uint64_t seed = 0;
};

// Draws `shots` outcomes +-1 with p(+1) = (1 + <P>)/2 from Rng(seed) and
// returns the empirical mean with the binomial standard error.
ShotEstimate sample_pauli(const ComplexMatrix& rho,
                          const std::string& pauli_word, int shots,
                          std::uint64_t seed);

// E_Bob = -h <IZ> + kappa <XX> + kappa <YY>, exact.
double bob_energy(const ComplexMatrix& rho, double h, double kappa);

struct EnergyEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Same combination from shot estimates; the estimates must be for IZ, XX,
// YY in that order. Errors propagate in quadrature with weights |h|,
// |kappa|, |kappa|.
EnergyEstimate bob_energy(const std::array<ShotEstimate, 3>& estimates,
                          double h, double kappa);

// Chebyshev bound delta = 1/(shots * epsilon^2) on the probability that a
// Pauli shot mean deviates from its expectation by more than epsilon
// (variance bound 1).
double chebyshev_budget(long long shots, double epsilon);

// Inverse query: the smallest shot count with chebyshev_budget <= delta.
long long chebyshev_shots(double epsilon, double delta);

}  // namespace qetlab
