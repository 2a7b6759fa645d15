// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qetlab/eig.hpp"
#include "qetlab/errors.hpp"

namespace qetlab {

namespace {

constexpr double kZeroProbability = 1e-14;

ComplexVector plus_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {Complex(inv_sqrt2, 0.0), Complex(inv_sqrt2, 0.0)};
}

ComplexVector minus_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {Complex(inv_sqrt2, 0.0), Complex(-inv_sqrt2, 0.0)};
}

ComplexVector outcome_state(char outcome) {
  if (outcome == '+') return plus_state();
  if (outcome == '-') return minus_state();
  throw std::invalid_argument("outcome label must be '+' or '-'");
}

void require_normalized(const ComplexVector& v, const char* what) {
  if (std::abs(norm(v) - 1.0) > 1e-10) {
    throw std::invalid_argument(std::string(what) + " must be normalized");
  }
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b).trace().real();
}

ComplexMatrix yy_operator() { return kron(pauli_y(), pauli_y()); }

}  // namespace

DensityMatrix MeasurementEnsemble::mixture() const {
  if (branches.empty()) {
    throw std::invalid_argument("ensemble has no branches");
  }
  ComplexMatrix sum = ComplexMatrix::zero(branches.front().post_state.dim());
  for (const MeasurementBranch& branch : branches) {
    sum += branch.post_state.matrix() * Complex(branch.probability, 0.0);
  }
  return DensityMatrix::from_matrix(sum);
}

MeasurementEnsemble alice_x_measurement(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("alice_x_measurement expects a 4x4 state");
  }
  MeasurementEnsemble ensemble;
  const ComplexMatrix eye2 = ComplexMatrix::identity(2);
  for (const char label : {'+', '-'}) {
    const ComplexVector alice = outcome_state(label);
    const ComplexMatrix projector = kron(outer(alice, alice), eye2);
    const ComplexMatrix projected = projector * rho.matrix() * projector;
    double p = projected.trace().real();
    if (p < 0.0) p = 0.0;

    MeasurementBranch branch{
        label, p,
        p > kZeroProbability
            ? DensityMatrix::from_matrix(projected * Complex(1.0 / p, 0.0))
            : DensityMatrix::from_matrix(
                  kron(outer(alice, alice), eye2 * Complex(0.5, 0.0))),
        alice,
        p <= kZeroProbability};
    ensemble.branches.push_back(std::move(branch));
  }
  return ensemble;
}

ComplexVector bob_pure_state(const MeasurementBranch& branch) {
  const ComplexMatrix bob =
      partial_trace(branch.post_state.matrix(), 0, {2, 2});
  const EigenDecomposition decomposition = eig_hermitian(bob);
  const double top = decomposition.eigenvalues.back();
  if (top < 1.0 - 1e-9) {
    throw NumericalError("branch state of Bob is not pure");
  }
  return phase_fixed(
      decomposition.eigenvector(decomposition.eigenvalues.size() - 1));
}

EffectiveHamiltonian effective_hamiltonian(const Hamiltonian& hamiltonian,
                                           const ComplexVector& alice_state,
                                           char outcome_label) {
  if (alice_state.size() != 2) {
    throw std::invalid_argument("alice_state must be a 2-vector");
  }
  require_normalized(alice_state, "alice_state");

  ComplexMatrix m = ComplexMatrix::zero(2);
  for (int b = 0; b < 2; ++b) {
    for (int b2 = 0; b2 < 2; ++b2) {
      Complex sum(0.0, 0.0);
      for (int a = 0; a < 2; ++a) {
        for (int a2 = 0; a2 < 2; ++a2) {
          sum += std::conj(alice_state[a]) *
                 hamiltonian.matrix(2 * a + b, 2 * a2 + b2) * alice_state[a2];
        }
      }
      m(b, b2) = sum;
    }
  }

  EffectiveHamiltonian eff;
  eff.matrix = m;
  eff.outcome_label = outcome_label;
  const EigenDecomposition decomposition = eig_hermitian(m);
  eff.ground_state = phase_fixed(decomposition.eigenvector(0));
  eff.ground_energy = decomposition.eigenvalues[0];
  eff.excited_energy = decomposition.eigenvalues[1];
  return eff;
}

ComplexMatrix optimal_conditional_unitary(const EffectiveHamiltonian& eff,
                                          const ComplexVector& bob_state) {
  if (bob_state.size() != 2) {
    throw std::invalid_argument("bob_state must be a 2-vector");
  }
  require_normalized(bob_state, "bob_state");

  const double scale = 1.0 + eff.matrix.frobenius_norm();
  const double gap = eff.excited_energy - eff.ground_energy;
  if (eff.matrix.frobenius_norm() <= 1e-12 * scale || gap <= 1e-12 * scale) {
    return ComplexMatrix::identity(2);
  }

  const auto perp = [](const ComplexVector& v) -> ComplexVector {
    return {-std::conj(v[1]), std::conj(v[0])};
  };
  const ComplexVector& g = eff.ground_state;
  ComplexMatrix u =
      outer(g, bob_state) + outer(perp(g), perp(bob_state));

  for (int row = 0; row < 2; ++row) {
    const Complex entry = u(row, 0);
    if (std::abs(entry) > 1e-12) {
      u *= std::conj(entry) / std::abs(entry);
      break;
    }
  }
  return u;
}

ComplexVector protocol_initial_state(const Hamiltonian& hamiltonian) {
  switch (hamiltonian.params.model) {
    case Model::Original:
      return ground_state(hamiltonian);
    case Model::FlipFlop:
      return {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
              Complex(0.0, 0.0)};
    case Model::Family:
      return family_basis(hamiltonian.params.alpha, hamiltonian.params.beta)
          .v[1];
  }
  throw std::invalid_argument("unknown model");
}

ProtocolReport run_protocol(const ModelParams& params,
                            const ProtocolOptions& options) {
  const Hamiltonian hamiltonian = build_hamiltonian(params);
  const ComplexMatrix yy = yy_operator();

  ProtocolReport report;
  report.params = params;

  const ComplexVector initial = protocol_initial_state(hamiltonian);
  const DensityMatrix initial_state = DensityMatrix::pure(initial);
  report.initial_state = initial_state.matrix();
  report.yy_expectation_trace[0] = real_expectation(initial_state, yy);

  report.ensemble = alice_x_measurement(initial_state);
  const DensityMatrix post = report.ensemble.mixture();
  report.post_measurement_state = post.matrix();
  report.yy_expectation_trace[1] = real_expectation(post, yy);
  report.energy_before = real_trace_product(hamiltonian.matrix, post.matrix());

  const ComplexMatrix eye2 = ComplexMatrix::identity(2);
  ComplexMatrix final_state = ComplexMatrix::zero(4);
  for (std::size_t i = 0; i < report.ensemble.branches.size(); ++i) {
    const MeasurementBranch& branch = report.ensemble.branches[i];
    if (branch.zero_probability) {
      report.warnings.push_back(
          std::string("measurement branch ") + branch.label +
          " has zero probability; canonical post state retained");
    }
    report.effective_hams[i] =
        effective_hamiltonian(hamiltonian, branch.alice_state, branch.label);
    const ComplexVector bob = bob_pure_state(branch);
    report.conditional_unitaries[i] =
        optimal_conditional_unitary(report.effective_hams[i], bob);
    const ComplexMatrix lifted = kron(eye2, report.conditional_unitaries[i]);
    final_state += lifted * branch.post_state.matrix() * lifted.adjoint() *
                   Complex(branch.probability, 0.0);
  }
  report.final_state = final_state;

  const DensityMatrix final_dm = DensityMatrix::from_matrix(final_state);
  report.yy_expectation_trace[2] = real_expectation(final_dm, yy);
  report.energy_after =
      real_trace_product(hamiltonian.matrix, final_state);
  report.extracted = report.energy_before - report.energy_after;

  if (options.certify) {
    OracleOptions oracle_options;
    oracle_options.starts = options.oracle_starts;
    oracle_options.iterations = options.oracle_iterations;
    oracle_options.seed = options.seed;
    report.slp_initial = certify_slp_full(initial_state.matrix(),
                                          hamiltonian.matrix, oracle_options);
    report.slp_post_measurement =
        certify_slp_full(post.matrix(), hamiltonian.matrix, oracle_options);

    if (!report.slp_initial->m_test.psd_verdict) {
      report.warnings.push_back(
          "initial state is not SLP: local extraction is already possible");
    }
    if (!report.slp_post_measurement->m_test.psd_verdict) {
      report.warnings.push_back(
          "post-measurement state is not SLP: conditional operations are "
          "not required for extraction");
    }
    if (report.slp_initial->oracle_stagnated ||
        report.slp_post_measurement->oracle_stagnated) {
      report.warnings.push_back(
          "channel-minimization oracle hit its iteration cap; best value "
          "so far reported");
    }
  }
  return report;
}

std::vector<SweepPoint> extraction_ratio_sweep(
    const std::vector<double>& kappa_over_h) {
  std::vector<SweepPoint> points;
  points.reserve(kappa_over_h.size());
  for (const double kappa : kappa_over_h) {
    if (!(kappa > 0.0)) {
      throw std::invalid_argument("sweep requires kappa/h > 0");
    }
    const MixingAngles angles = mixing_angles(1.0, kappa);
    SweepPoint point;
    point.kappa_over_h = kappa;
    const double sin_theta = std::sin(angles.theta);
    const double sin_delta = std::sin(angles.phi - angles.theta);
    point.e_new = 2.0 * sin_theta * sin_theta * std::sqrt(1.0 + kappa * kappa);
    point.e_orig =
        2.0 * sin_delta * sin_delta * std::sqrt(1.0 + 4.0 * kappa * kappa);
    point.ratio = point.e_new / point.e_orig;
    points.push_back(point);
  }
  return points;
}

namespace {

// Bob's branch state and Alice's outcome vector for the model's protocol
// initial state — the common starting point of the Zeno iteration and its
// exact comparator.
struct ZenoStart {
  ComplexVector alice;
  ComplexVector bob;
};

ZenoStart zeno_start(const Hamiltonian& hamiltonian, char outcome) {
  const ComplexVector initial = protocol_initial_state(hamiltonian);
  const MeasurementEnsemble ensemble =
      alice_x_measurement(DensityMatrix::pure(initial));
  const std::size_t index = outcome == '+' ? 0 : 1;
  const MeasurementBranch& branch = ensemble.branches.at(index);
  if (branch.zero_probability) {
    throw NumericalError("requested Zeno branch has zero probability");
  }
  return {outcome_state(outcome), bob_pure_state(branch)};
}

}  // namespace

DensityMatrix zeno_evolve(const Hamiltonian& hamiltonian, char outcome,
                          double t, int steps) {
  outcome_state(outcome);  // validates the label
  if (steps < 1) {
    throw std::invalid_argument("zeno_evolve requires steps >= 1");
  }
  if (t < 0.0) {
    throw std::invalid_argument("zeno_evolve requires t >= 0");
  }

  const ZenoStart start = zeno_start(hamiltonian, outcome);
  ComplexVector psi = kron(start.alice, start.bob);

  const double dt = t / steps;
  const ComplexMatrix projector =
      kron(outer(start.alice, start.alice), ComplexMatrix::identity(2));
  // P (I - i H dt), the literal first-order projected step.
  const ComplexMatrix step =
      projector * (ComplexMatrix::identity(4) -
                   hamiltonian.matrix * Complex(0.0, dt));
  for (int k = 0; k < steps; ++k) {
    psi = matvec(step, psi);
    const double n = norm(psi);
    if (n * n <= 1e-12) {
      throw NumericalError("Zeno branch probability collapsed");
    }
    for (Complex& amplitude : psi) amplitude /= n;
  }

  return DensityMatrix::from_matrix(partial_trace(outer(psi, psi), 0, {2, 2}));
}

DensityMatrix effective_evolution(const Hamiltonian& hamiltonian, char outcome,
                                  double t) {
  const ZenoStart start = zeno_start(hamiltonian, outcome);
  const EffectiveHamiltonian eff =
      effective_hamiltonian(hamiltonian, start.alice, outcome);
  const ComplexVector evolved =
      matvec(evolution_unitary(eff.matrix, t), start.bob);
  return DensityMatrix::pure(evolved);
}

}  // namespace qetlab
