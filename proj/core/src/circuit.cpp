// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qetlab/errors.hpp"
#include "qetlab/hamiltonian.hpp"
#include "qetlab/rng.hpp"

namespace qetlab {

namespace {

constexpr double kBranchFloor = 1e-14;

void require_qubit(int index, const char* what) {
  if (index != 0 && index != 1) {
    throw std::invalid_argument(std::string(what) + " must be 0 or 1");
  }
}

void require_unitary(const ComplexMatrix& u) {
  if (u.dim() != 2) {
    throw std::invalid_argument("controlled unitary must be 2x2");
  }
  ComplexMatrix defect = u.adjoint() * u;
  defect -= ComplexMatrix::identity(2);
  if (defect.frobenius_norm() > 1e-12 * (1.0 + u.frobenius_norm())) {
    throw std::invalid_argument("controlled payload is not unitary");
  }
}

// Embeds a single-qubit operator on the given qubit of the pair.
ComplexMatrix embed(const ComplexMatrix& op, int qubit) {
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  return qubit == 0 ? kron(op, eye) : kron(eye, op);
}

ComplexMatrix basis_projector(MeasureBasis basis, int outcome) {
  if (basis == MeasureBasis::Z) {
    ComplexMatrix p = ComplexMatrix::zero(2);
    p(outcome, outcome) = Complex(1.0, 0.0);
    return p;
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double sign = outcome == 0 ? 1.0 : -1.0;
  const ComplexVector v = {Complex(inv_sqrt2, 0.0),
                           Complex(sign * inv_sqrt2, 0.0)};
  return outer(v, v);
}

ComplexMatrix controlled_unitary_matrix(const Gate& gate) {
  ComplexMatrix p_active = ComplexMatrix::zero(2);
  p_active(gate.control_value, gate.control_value) = Complex(1.0, 0.0);
  ComplexMatrix p_idle = ComplexMatrix::identity(2);
  p_idle -= p_active;

  const ComplexMatrix eye = ComplexMatrix::identity(2);
  if (gate.control == 0) {
    return kron(p_active, gate.unitary) + kron(p_idle, eye);
  }
  return kron(gate.unitary, p_active) + kron(eye, p_idle);
}

void validate_mode(const Circuit& circuit) {
  bool any_measured = false;
  std::array<bool, 2> measured = {false, false};
  for (const Gate& gate : circuit.gates) {
    if (gate.kind == GateKind::Measure) {
      any_measured = true;
      measured[gate.target] = true;
      continue;
    }
    if (gate.kind != GateKind::ControlledU) continue;
    if (circuit.mode == CircuitMode::Dynamic && !measured[gate.control]) {
      throw std::invalid_argument(
          "dynamic circuit: conditional gate precedes the measurement of "
          "its control qubit");
    }
    if (circuit.mode == CircuitMode::Deferred && any_measured) {
      throw std::invalid_argument(
          "deferred circuit: measurement precedes a controlled gate");
    }
  }
}

}  // namespace

ComplexMatrix ry(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return ComplexMatrix::from_rows({{Complex(c, 0.0), Complex(-s, 0.0)},
                                   {Complex(s, 0.0), Complex(c, 0.0)}});
}

ComplexMatrix hadamard_matrix() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows(
      {{Complex(inv_sqrt2, 0.0), Complex(inv_sqrt2, 0.0)},
       {Complex(inv_sqrt2, 0.0), Complex(-inv_sqrt2, 0.0)}});
}

Gate Gate::hadamard(int target) {
  require_qubit(target, "target");
  Gate gate;
  gate.kind = GateKind::Hadamard;
  gate.target = target;
  return gate;
}

Gate Gate::pauli_x_gate(int target) {
  require_qubit(target, "target");
  Gate gate;
  gate.kind = GateKind::PauliX;
  gate.target = target;
  return gate;
}

Gate Gate::rotate_y(int target, double angle) {
  require_qubit(target, "target");
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
  Gate gate;
  gate.kind = GateKind::RotateY;
  gate.target = target;
  gate.angle = angle;
  return gate;
}

Gate Gate::controlled(int control, int control_value, int target,
                      const ComplexMatrix& unitary) {
  require_qubit(control, "control");
  require_qubit(target, "target");
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
  if (control_value != 0 && control_value != 1) {
    throw std::invalid_argument("control value must be 0 or 1");
  }
  require_unitary(unitary);
  Gate gate;
  gate.kind = GateKind::ControlledU;
  gate.control = control;
  gate.control_value = control_value;
  gate.target = target;
  gate.unitary = unitary;
  return gate;
}

Gate Gate::measure(int target, MeasureBasis basis) {
  require_qubit(target, "target");
  Gate gate;
  gate.kind = GateKind::Measure;
  gate.target = target;
  gate.basis = basis;
  return gate;
}

ComplexMatrix BranchEnsemble::final_mixture() const {
  if (branches.empty()) {
    throw std::invalid_argument("ensemble has no branches");
  }
  ComplexMatrix sum = ComplexMatrix::zero(branches.front().state.dim());
  for (const CircuitBranch& branch : branches) {
    sum += branch.state * Complex(branch.probability, 0.0);
  }
  return sum;
}

ComplexMatrix apply_gate(const ComplexMatrix& rho, const Gate& gate) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("circuit states are 4x4");
  }
  ComplexMatrix u;
  switch (gate.kind) {
    case GateKind::Hadamard:
      u = embed(hadamard_matrix(), gate.target);
      break;
    case GateKind::PauliX:
      u = embed(pauli_x(), gate.target);
      break;
    case GateKind::RotateY:
      u = embed(ry(gate.angle), gate.target);
      break;
    case GateKind::ControlledU:
      u = controlled_unitary_matrix(gate);
      break;
    case GateKind::Measure:
      throw std::invalid_argument(
          "measurement gates branch; use apply_measurement or simulate");
  }
  return u * rho * u.adjoint();
}

std::vector<MeasurementOutcome> apply_measurement(const ComplexMatrix& rho,
                                                  const Gate& gate) {
  if (gate.kind != GateKind::Measure) {
    throw std::invalid_argument("apply_measurement needs a Measure gate");
  }
  if (rho.dim() != 4) {
    throw std::invalid_argument("circuit states are 4x4");
  }
  std::vector<MeasurementOutcome> outcomes;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const ComplexMatrix projector =
        embed(basis_projector(gate.basis, outcome), gate.target);
    const ComplexMatrix projected = projector * rho * projector;
    double p = projected.trace().real();
    if (p < 0.0) p = 0.0;
    MeasurementOutcome result;
    result.outcome = outcome;
    result.probability = p;
    if (p > kBranchFloor) {
      result.state = projected * Complex(1.0 / p, 0.0);
    }
    outcomes.push_back(std::move(result));
  }
  return outcomes;
}

BranchEnsemble simulate(const Circuit& circuit, const ComplexMatrix& initial) {
  if (initial.dim() != 4) {
    throw std::invalid_argument("circuit states are 4x4");
  }
  validate_mode(circuit);

  BranchEnsemble ensemble;
  CircuitBranch root;
  root.probability = 1.0;
  root.state = initial;
  ensemble.branches.push_back(std::move(root));

  for (const Gate& gate : circuit.gates) {
    if (gate.kind == GateKind::Measure) {
      std::vector<CircuitBranch> next;
      for (CircuitBranch& branch : ensemble.branches) {
        for (MeasurementOutcome& outcome :
             apply_measurement(branch.state, gate)) {
          const double p = branch.probability * outcome.probability;
          if (p < kBranchFloor) continue;
          CircuitBranch child;
          child.probability = p;
          child.state = std::move(outcome.state);
          child.outcomes = branch.outcomes;
          child.outcomes.push_back(outcome.outcome);
          child.last_outcome = branch.last_outcome;
          child.last_outcome[gate.target] = outcome.outcome;
          next.push_back(std::move(child));
        }
      }
      ensemble.branches = std::move(next);
      continue;
    }

    for (CircuitBranch& branch : ensemble.branches) {
      if (gate.kind == GateKind::ControlledU &&
          branch.last_outcome[gate.control] >= 0) {
        // Control already collapsed: the gate acts classically.
        if (branch.last_outcome[gate.control] == gate.control_value) {
          const ComplexMatrix u = embed(gate.unitary, gate.target);
          branch.state = u * branch.state * u.adjoint();
        }
        continue;
      }
      branch.state = apply_gate(branch.state, gate);
    }
  }
  return ensemble;
}

namespace {

Circuit protocol_circuit(CircuitMode mode, const ComplexMatrix& u_plus,
                         const ComplexMatrix& u_minus) {
  Circuit circuit;
  circuit.mode = mode;
  if (mode == CircuitMode::Dynamic) {
    circuit.gates = {Gate::measure(0, MeasureBasis::X),
                     Gate::controlled(0, 0, 1, u_plus),
                     Gate::controlled(0, 1, 1, u_minus)};
    return circuit;
  }
  // Deferred: the X-basis-controlled rotation pair is conjugated into the
  // computational basis by Hadamards, and Alice's X measurement is delayed
  // to the very end; the final density matrix is then branch-for-branch
  // identical to the dynamic circuit's.
  circuit.gates = {Gate::hadamard(0),
                   Gate::controlled(0, 0, 1, u_plus),
                   Gate::controlled(0, 1, 1, u_minus),
                   Gate::hadamard(0),
                   Gate::measure(0, MeasureBasis::X)};
  return circuit;
}

double protocol_angle(double h, double kappa) {
  if (std::abs(kappa - h) <= 1e-12 * (std::abs(h) + std::abs(kappa))) {
    throw std::invalid_argument(
        "flip-flop circuit is degenerate at kappa == h");
  }
  return mixing_angles(h, kappa).theta;
}

}  // namespace

Circuit build_dynamic_circuit(double h, double kappa) {
  const double theta = protocol_angle(h, kappa);
  return protocol_circuit(CircuitMode::Dynamic, ry(-2.0 * theta),
                          ry(2.0 * theta));
}

Circuit build_deferred_circuit(double h, double kappa) {
  const double theta = protocol_angle(h, kappa);
  return protocol_circuit(CircuitMode::Deferred, ry(-2.0 * theta),
                          ry(2.0 * theta));
}

Circuit build_dynamic_circuit(const ComplexMatrix& u_plus,
                              const ComplexMatrix& u_minus) {
  return protocol_circuit(CircuitMode::Dynamic, u_plus, u_minus);
}

Circuit build_deferred_circuit(const ComplexMatrix& u_plus,
                               const ComplexMatrix& u_minus) {
  return protocol_circuit(CircuitMode::Deferred, u_plus, u_minus);
}

double expectation(const ComplexMatrix& rho, const std::string& pauli_word) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("circuit states are 4x4");
  }
  if (pauli_word.size() != 2) {
    throw std::invalid_argument("Pauli word must have one letter per qubit");
  }
  const auto single = [](char letter) -> ComplexMatrix {
    switch (letter) {
      case 'I': return pauli_i();
      case 'X': return pauli_x();
      case 'Y': return pauli_y();
      case 'Z': return pauli_z();
      default:
        throw std::invalid_argument("Pauli letters are I, X, Y, Z");
    }
  };
  const ComplexMatrix word = kron(single(pauli_word[0]), single(pauli_word[1]));
  const Complex value = (rho * word).trace();
  if (std::abs(value.imag()) > 1e-10) {
    throw NumericalError("Pauli expectation has a non-real trace");
  }
  return value.real();
}

ShotEstimate sample_pauli(const ComplexMatrix& rho,
                          const std::string& pauli_word, int shots,
                          std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample_pauli requires shots >= 1");
  }
  const double exact = expectation(rho, pauli_word);
  double p_plus = 0.5 * (1.0 + exact);
  if (p_plus < 0.0) p_plus = 0.0;
  if (p_plus > 1.0) p_plus = 1.0;

  Rng rng(seed);
  long long plus_count = 0;
  for (int i = 0; i < shots; ++i) {
    if (rng.uniform01() < p_plus) ++plus_count;
  }

  ShotEstimate estimate;
  estimate.observable = pauli_word;
  estimate.shots = shots;
  estimate.seed = seed;
  estimate.mean =
      static_cast<double>(2 * plus_count - shots) / static_cast<double>(shots);
  double variance = 1.0 - estimate.mean * estimate.mean;
  if (variance < 0.0) variance = 0.0;
  estimate.std_error = std::sqrt(variance / static_cast<double>(shots));
  return estimate;
}

double bob_energy(const ComplexMatrix& rho, double h, double kappa) {
  return -h * expectation(rho, "IZ") + kappa * expectation(rho, "XX") +
         kappa * expectation(rho, "YY");
}

EnergyEstimate bob_energy(const std::array<ShotEstimate, 3>& estimates,
                          double h, double kappa) {
  static constexpr std::array<const char*, 3> kExpected = {"IZ", "XX", "YY"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (estimates[i].observable != kExpected[i]) {
      throw std::invalid_argument(
          "bob_energy expects estimates for IZ, XX, YY in that order");
    }
  }
  EnergyEstimate result;
  result.value = -h * estimates[0].mean + kappa * estimates[1].mean +
                 kappa * estimates[2].mean;
  result.std_error = std::sqrt(
      h * h * estimates[0].std_error * estimates[0].std_error +
      kappa * kappa * estimates[1].std_error * estimates[1].std_error +
      kappa * kappa * estimates[2].std_error * estimates[2].std_error);
  return result;
}

double chebyshev_budget(long long shots, double epsilon) {
  if (shots < 1) {
    throw std::invalid_argument("chebyshev_budget requires shots >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("chebyshev_budget requires epsilon > 0");
  }
  return 1.0 / (static_cast<double>(shots) * epsilon * epsilon);
}

long long chebyshev_shots(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !(delta > 0.0)) {
    throw std::invalid_argument("chebyshev_shots requires positive inputs");
  }
  return static_cast<long long>(std::ceil(1.0 / (delta * epsilon * epsilon)));
}

}  // namespace qetlab
