// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end quantum energy teleportation protocols on the model
// Hamiltonians: Alice's X-basis measurement, Bob's local effective
// Hamiltonian, optimal conditional rotations, energy bookkeeping, the
// extraction-ratio sweep, and Zeno-pinned dynamics.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qetlab/complex_matrix.hpp"
#include "qetlab/hamiltonian.hpp"
#include "qetlab/slp.hpp"
#include "qetlab/state.hpp"

namespace qetlab {

// One projective branch of Alice's X-basis measurement.
struct MeasurementBranch {
  char label = '+';           // '+' or '-'
  double probability = 0.0;   // in [0, 1]
  DensityMatrix post_state;   // 4x4, Alice factor |+-><+-|
  ComplexVector alice_state;  // the projected 2-vector |+> or |->
  bool zero_probability = false;  // branch retained although p ~ 0
};

struct MeasurementEnsemble {
  std::vector<MeasurementBranch> branches;  // '+' first, then '-'

  // sum_i p_i * post_state_i (the dephased post-measurement state).
  DensityMatrix mixture() const;
};

// Projective X-basis measurement of Alice's qubit. Probabilities sum to 1;
// zero-probability branches are kept (flagged) with the canonical post
// state |+-><+-| (x) I/2 so downstream consumers always see two branches.
MeasurementEnsemble alice_x_measurement(const DensityMatrix& rho);

// Bob's pure branch state. Throws NumericalError when Bob's reduced state
// of the branch is not pure (largest eigenvalue < 1 - 1e-9).
ComplexVector bob_pure_state(const MeasurementBranch& branch);

// Bob's local effective Hamiltonian <psi_A| H |psi_A> once Alice's state
// is pinned, with its eigensystem.
struct EffectiveHamiltonian {
  ComplexMatrix matrix;       // 2x2 Hermitian
  char outcome_label = '?';
  ComplexVector ground_state; // phase-fixed
  double ground_energy = 0.0;
  double excited_energy = 0.0;
};

// Contracts H over Alice's factor: matrix[b][b'] =
// sum_{a,a'} conj(psi[a]) H[(a,b),(a',b')] psi[a'].
// Throws std::invalid_argument when alice_state is not normalized
// (within 1e-10).
EffectiveHamiltonian effective_hamiltonian(const Hamiltonian& hamiltonian,
                                           const ComplexVector& alice_state,
                                           char outcome_label = '?');

// The unitary rotating bob_state onto eff.ground_state:
// U = |g><b| + |g_perp><b_perp| with the global phase fixed so the first
// sizable entry of column 0 is real and non-negative. When the effective
// Hamiltonian is degenerate (zero matrix or zero gap), returns identity.
// Throws std::invalid_argument when bob_state is not normalized.
ComplexMatrix optimal_conditional_unitary(const EffectiveHamiltonian& eff,
                                          const ComplexVector& bob_state);

// The canonical initial pure state of each model's protocol:
// Original -> the two-qubit ground state; FlipFlop -> |00>;
// Family -> v2 = |0> (x) |phi> (the -F eigenstate).
ComplexVector protocol_initial_state(const Hamiltonian& hamiltonian);

struct ProtocolOptions {
  bool certify = true;       // attach SLP certificates (M-test + oracle)
  int oracle_starts = 64;    // forwarded to the oracle when certifying
  int oracle_iterations = 2000;
  std::uint64_t seed = 42;
};

struct ProtocolReport {
  ModelParams params;
  MeasurementEnsemble ensemble;
  std::array<EffectiveHamiltonian, 2> effective_hams;   // {+, -}
  std::array<ComplexMatrix, 2> conditional_unitaries;   // {+, -}
  ComplexMatrix initial_state;           // pre-measurement state
  ComplexMatrix post_measurement_state;  // dephased mixture
  ComplexMatrix final_state;             // after conditional rotations
  double energy_before = 0.0;  // Tr(H * post_measurement_state)
  double energy_after = 0.0;   // Tr(H * final_state)
  double extracted = 0.0;      // energy_before - energy_after
  std::optional<SlpCertificate> slp_initial;
  std::optional<SlpCertificate> slp_post_measurement;
  // <Y (x) Y> at [initial, post-measurement, final].
  std::array<double, 3> yy_expectation_trace{};
  std::vector<std::string> warnings;
};

// Full pipeline: prepare the model's initial state, measure Alice in the
// X basis, certify SLP of the initial and post-measurement states (when
// options.certify), rotate each branch to its conditional ground state,
// and account for the energy. Non-SLP certificates and oracle stagnation
// become warnings, never errors.
ProtocolReport run_protocol(const ModelParams& params,
                            const ProtocolOptions& options = {});

// One grid point of the extraction-ratio sweep (h = 1).
struct SweepPoint {
  double kappa_over_h = 0.0;
  double e_new = 0.0;   // 2 sin^2(theta) sqrt(h^2 + kappa^2)
  double e_orig = 0.0;  // 2 sin^2(phi - theta) sqrt(h^2 + 4 kappa^2)
  double ratio = 0.0;   // e_new / e_orig
};

// Closed-form extraction energies of the two protocols at h = 1 for each
// kappa/h value. Throws std::invalid_argument on non-positive ratios.
std::vector<SweepPoint> extraction_ratio_sweep(
    const std::vector<double>& kappa_over_h);

// Zeno-pinned evolution: starting from the `outcome` branch of the
// X-basis measurement on the model's initial state, iterates the literal
// first-order step  psi <- (P_outcome (x) I)(I - i H dt) psi  with
// dt = t/steps, renormalizing after every step, and returns Bob's reduced
// state. Throws std::invalid_argument for bad outcome/steps/t < 0 and
// NumericalError when the branch probability collapses.
DensityMatrix zeno_evolve(const Hamiltonian& hamiltonian, char outcome,
                          double t, int steps);

// Comparator for zeno_evolve: Bob's state under the exact effective-
// Hamiltonian evolution e^{-i H_eff t} applied to his branch state.
DensityMatrix effective_evolution(const Hamiltonian& hamiltonian,
                                  char outcome, double t);

}  // namespace qetlab
