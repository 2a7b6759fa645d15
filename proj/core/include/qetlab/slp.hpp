// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Strong local passivity (SLP) certification for two-qubit states.
//
// A state rho of a bipartite system AB with Hamiltonian H is strongly
// locally passive when no local CPTP map on B can extract energy:
//   Delta E(Phi) = Tr[H (id (x) Phi)(rho)] - Tr[H rho] >= 0 for all Phi.
//
// Delta E is linear in the Choi matrix X of Phi, so the condition reduces
// to an operator test. Define, on the 4-dimensional space B (x) B'
// (input factor most significant, index 2b + b'):
//
//   C[(b,b'),(b'',b''')] = sum_{a,a'} rho[(a,b''),(a',b)] H[(a',b'),(a,b''')]
//
// built here by lifting H to A (x) B (x) B' and tracing out A against
// kron(partial_transpose(rho, B), I). With J the unnormalized maximally
// entangled projector on B (x) B',
//
//   M = C - kron(Tr_B'[J C], I)
//
// satisfies Delta E(Phi) = Tr[X M] for every trace-preserving Phi, and
// <omega| M |omega> = 0 for the identity channel, so min over channels is
// always <= 0 and rho is SLP exactly when the minimum eigenvalue of the
// Hermitian part of M is zero.
//
// Two certifiers are provided:
//   * certify_slp      - the eigenvalue test on M (fast, exact criterion);
//   * min_delta_e_oracle - brute-force minimization of Delta E over
//     Stinespring-dilated channels (slow, independent cross-check).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qetlab/complex_matrix.hpp"
#include "qetlab/rng.hpp"

namespace qetlab {

// Absolute eigenvalue floor (relative to 1 + ||H||_F) below which the
// M-test declares the state non-SLP.
inline constexpr double kPsdTol = 1e-9;
// Tolerance for the brute-force oracle verdict and the upper edge of the
// M-test's indeterminate band.
inline constexpr double kOracleTol = 1e-6;
// Band around zero (relative to 1 + ||H||_F) inside which the M-test and
// the oracle are considered too close to compare.
inline constexpr double kAgreementBand = 1e-4;

// A CPTP channel on one qubit in Kraus form. `completeness_defect` is
// ||sum_e K_e^dag K_e - I||_F as computed when the channel was built.
struct QuantumChannel {
  std::vector<ComplexMatrix> kraus;
  double completeness_defect = 0.0;
};

// Builds a channel from explicit Kraus operators, computing the defect.
QuantumChannel make_channel(std::vector<ComplexMatrix> kraus);

// Channel from a 16-parameter Hermitian generator: A has diagonal
// params[0..3] and off-diagonal entries params[4+2k] + i*params[4+2k+1]
// for the pairs (0,1),(0,2),(0,3),(1,2),(1,3),(2,3); U = exp(-iA) acts on
// system (x) environment (environment least significant, initialized to
// |0>), and K_e[i][j] = U[2i+e][2j]. Always exactly CPTP up to rounding.
QuantumChannel channel_from_generator(const std::array<double, 16>& params);

// Haar-ish random CPTP channel: 16 standard Gaussian generator parameters.
QuantumChannel sample_cptp(Rng& rng);

// The unnormalized maximally entangled projector J = |omega><omega| with
// omega = (1, 0, 0, 1) on B (x) B'.
ComplexMatrix build_choi_identity();

// Choi matrix of `channel` in the same B (x) B' ordering as build_m:
// sum_e kron(I, K_e) J kron(I, K_e)^dag. For any trace-preserving channel,
// Tr[choi_matrix(channel) * build_m(rho, h)] == channel_delta_e(rho, h, channel).
ComplexMatrix choi_matrix(const QuantumChannel& channel);

// The contraction C of rho and the Hamiltonian described above. Both
// inputs must be 4x4; rho must be a density matrix for the physical
// interpretation, but only dimensions are validated here.
ComplexMatrix build_c(const ComplexMatrix& rho, const ComplexMatrix& hamiltonian);

// The test operator M = C - kron(Tr_B'[J C], I). Returned exactly as the
// formula gives it; certify_slp takes the Hermitian part before the
// eigenvalue test (the quadratic form over Hermitian Choi matrices only
// sees the Hermitian part).
ComplexMatrix build_m(const ComplexMatrix& rho, const ComplexMatrix& hamiltonian);

// Result of the M-matrix eigenvalue test. Eigenvalues are of the
// Hermitian part of M, ascending. With s = 1 + ||H||_F:
//   * psd_verdict:   min_eigenvalue >= -tol * s (state certified SLP)
//   * indeterminate: min_eigenvalue in [-kOracleTol * s, -tol * s) --
//     formally non-SLP but by a margin below what the numerics resolve.
struct MTestResult {
  std::array<double, 4> m_eigenvalues{};
  double min_eigenvalue = 0.0;
  bool psd_verdict = false;
  bool indeterminate = false;
};

MTestResult certify_slp(const ComplexMatrix& rho,
                        const ComplexMatrix& hamiltonian,
                        double tol = kPsdTol);

struct OracleOptions {
  int starts = 64;          // multistart count; start 0 is the identity channel
  int iterations = 2000;    // Nelder-Mead iteration cap per start
  std::uint64_t seed = 42;  // base seed; start k uses derive_seed(seed, k)
};

struct OracleResult {
  double min_delta_e = 0.0;   // best (most negative) Delta E found
  QuantumChannel channel;     // channel achieving it
  bool stagnated = false;     // best run hit the iteration cap unconverged
};

// Brute-force minimization of Delta E over CPTP channels on B via
// Nelder-Mead on the 16-parameter Stinespring generator. Deterministic
// for fixed options. min_delta_e <= 0 always (identity channel anchor).
OracleResult min_delta_e_oracle(const ComplexMatrix& rho,
                                const ComplexMatrix& hamiltonian,
                                const OracleOptions& options = {});

// Joint certificate: M-test plus oracle plus cross-check.
// `agreement` is empty when |min eigenvalue of M| <= kAgreementBand * s
// (the instance is too marginal to compare the two methods); otherwise it
// records whether the two verdicts coincide.
struct SlpCertificate {
  MTestResult m_test;
  double oracle_min_delta_e = 0.0;
  QuantumChannel oracle_channel;
  bool oracle_stagnated = false;
  std::optional<bool> agreement;
};

SlpCertificate certify_slp_full(const ComplexMatrix& rho,
                                const ComplexMatrix& hamiltonian,
                                const OracleOptions& options = {});

// Applies `channel` to Bob's qubit: sum_e kron(I, K_e) rho kron(I, K_e)^dag.
ComplexMatrix apply_channel_on_b(const ComplexMatrix& rho,
                                 const QuantumChannel& channel);

// Delta E for one concrete channel. Throws std::invalid_argument when the
// Kraus operators fail completeness by more than 1e-10.
double channel_delta_e(const ComplexMatrix& rho,
                       const ComplexMatrix& hamiltonian,
                       const QuantumChannel& channel);

}  // namespace qetlab
