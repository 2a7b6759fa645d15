// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qetlab/slp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qetlab/eig.hpp"
#include "qetlab/nelder_mead.hpp"

namespace qetlab {

namespace {

void require_two_qubit(const ComplexMatrix& m, const char* what) {
  if (m.dim() != 4) {
    throw std::invalid_argument(std::string(what) + " must be 4x4");
  }
}

double completeness_defect_of(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) {
    throw std::invalid_argument("channel needs at least one Kraus operator");
  }
  const std::size_t dim = kraus.front().dim();
  ComplexMatrix sum = ComplexMatrix::zero(dim);
  for (const ComplexMatrix& k : kraus) {
    if (k.dim() != dim) {
      throw std::invalid_argument("Kraus operators must share one dimension");
    }
    sum += k.adjoint() * k;
  }
  sum -= ComplexMatrix::identity(dim);
  return sum.frobenius_norm();
}

}  // namespace

QuantumChannel make_channel(std::vector<ComplexMatrix> kraus) {
  QuantumChannel channel;
  channel.completeness_defect = completeness_defect_of(kraus);
  channel.kraus = std::move(kraus);
  return channel;
}

QuantumChannel channel_from_generator(const std::array<double, 16>& params) {
  ComplexMatrix generator = ComplexMatrix::zero(4);
  for (std::size_t i = 0; i < 4; ++i) {
    generator(i, i) = Complex(params[i], 0.0);
  }
  static constexpr std::array<std::pair<int, int>, 6> kPairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (std::size_t k = 0; k < kPairs.size(); ++k) {
    const auto [i, j] = kPairs[k];
    const Complex value(params[4 + 2 * k], params[4 + 2 * k + 1]);
    generator(i, j) = value;
    generator(j, i) = std::conj(value);
  }
  const ComplexMatrix unitary = evolution_unitary(generator, 1.0);

  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < 2; ++e) {
    ComplexMatrix k = ComplexMatrix::zero(2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        k(i, j) = unitary(2 * i + e, 2 * j);
      }
    }
    kraus.push_back(k);
  }
  return make_channel(std::move(kraus));
}

QuantumChannel sample_cptp(Rng& rng) {
  std::array<double, 16> params{};
  for (double& p : params) p = rng.gaussian();
  return channel_from_generator(params);
}

ComplexMatrix build_choi_identity() {
  const ComplexVector omega = {Complex(1.0, 0.0), Complex(0.0, 0.0),
                               Complex(0.0, 0.0), Complex(1.0, 0.0)};
  return outer(omega, omega);
}

ComplexMatrix choi_matrix(const QuantumChannel& channel) {
  const ComplexVector omega = {Complex(1.0, 0.0), Complex(0.0, 0.0),
                               Complex(0.0, 0.0), Complex(1.0, 0.0)};
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  ComplexMatrix choi = ComplexMatrix::zero(4);
  for (const ComplexMatrix& k : channel.kraus) {
    const ComplexVector column = matvec(kron(eye, k), omega);
    choi += outer(column, column);
  }
  return choi;
}

ComplexMatrix build_c(const ComplexMatrix& rho,
                      const ComplexMatrix& hamiltonian) {
  require_two_qubit(rho, "rho");
  require_two_qubit(hamiltonian, "hamiltonian");

  // Lift H from A (x) B' to A (x) B (x) B' (identity on B):
  // lift[(4a+2b+b'), (4a'+2b''+b''')] = H[(2a+b'), (2a'+b''')] delta_{b,b''}.
  ComplexMatrix lift = ComplexMatrix::zero(8);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int bp = 0; bp < 2; ++bp) {
        for (int a2 = 0; a2 < 2; ++a2) {
          for (int b3 = 0; b3 < 2; ++b3) {
            lift(4 * a + 2 * b + bp, 4 * a2 + 2 * b + b3) =
                hamiltonian(2 * a + bp, 2 * a2 + b3);
          }
        }
      }
    }
  }

  const ComplexMatrix big =
      kron(partial_transpose(rho, 1, {2, 2}), ComplexMatrix::identity(2));
  return partial_trace(big * lift, 0, {2, 4});
}

ComplexMatrix build_m(const ComplexMatrix& rho,
                      const ComplexMatrix& hamiltonian) {
  const ComplexMatrix c = build_c(rho, hamiltonian);
  const ComplexMatrix jc = build_choi_identity() * c;
  const ComplexMatrix traced = partial_trace(jc, 1, {2, 2});
  return c - kron(traced, ComplexMatrix::identity(2));
}

MTestResult certify_slp(const ComplexMatrix& rho,
                        const ComplexMatrix& hamiltonian, double tol) {
  const ComplexMatrix m = hermitian_part(build_m(rho, hamiltonian));
  const EigenDecomposition decomposition = eig_hermitian(m);

  MTestResult result;
  for (std::size_t i = 0; i < 4; ++i) {
    result.m_eigenvalues[i] = decomposition.eigenvalues[i];
  }
  result.min_eigenvalue = result.m_eigenvalues[0];

  const double scale = 1.0 + hamiltonian.frobenius_norm();
  result.psd_verdict = result.min_eigenvalue >= -tol * scale;
  result.indeterminate = !result.psd_verdict &&
                         result.min_eigenvalue >= -kOracleTol * scale;
  return result;
}

ComplexMatrix apply_channel_on_b(const ComplexMatrix& rho,
                                 const QuantumChannel& channel) {
  require_two_qubit(rho, "rho");
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  ComplexMatrix out = ComplexMatrix::zero(4);
  for (const ComplexMatrix& k : channel.kraus) {
    const ComplexMatrix lifted = kron(eye, k);
    out += lifted * rho * lifted.adjoint();
  }
  return out;
}

double channel_delta_e(const ComplexMatrix& rho,
                       const ComplexMatrix& hamiltonian,
                       const QuantumChannel& channel) {
  require_two_qubit(rho, "rho");
  require_two_qubit(hamiltonian, "hamiltonian");
  if (completeness_defect_of(channel.kraus) > 1e-10) {
    throw std::invalid_argument("channel is not trace preserving");
  }
  const Complex before = (rho * hamiltonian).trace();
  const Complex after =
      (apply_channel_on_b(rho, channel) * hamiltonian).trace();
  return after.real() - before.real();
}

OracleResult min_delta_e_oracle(const ComplexMatrix& rho,
                                const ComplexMatrix& hamiltonian,
                                const OracleOptions& options) {
  require_two_qubit(rho, "rho");
  require_two_qubit(hamiltonian, "hamiltonian");
  if (options.starts < 1 || options.iterations < 1) {
    throw std::invalid_argument("oracle needs starts >= 1 and iterations >= 1");
  }

  const auto objective = [&](const std::vector<double>& x) {
    std::array<double, 16> params{};
    for (std::size_t i = 0; i < 16; ++i) params[i] = x[i];
    // channel_from_generator is exactly trace preserving by construction,
    // so skip the completeness re-check on the hot path.
    const QuantumChannel channel = channel_from_generator(params);
    const Complex before = (rho * hamiltonian).trace();
    const Complex after =
        (apply_channel_on_b(rho, channel) * hamiltonian).trace();
    return after.real() - before.real();
  };

  NelderMeadOptions nm_options;
  nm_options.max_iterations = options.iterations;

  OracleResult best;
  bool have_best = false;
  for (int start = 0; start < options.starts; ++start) {
    std::vector<double> x0(16, 0.0);
    if (start > 0) {
      Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(start)));
      for (double& xi : x0) xi = rng.gaussian();
    }
    const NelderMeadResult run = nelder_mead(objective, std::move(x0), nm_options);
    if (!have_best || run.value < best.min_delta_e) {
      have_best = true;
      best.min_delta_e = run.value;
      best.stagnated = !run.converged;
      std::array<double, 16> params{};
      for (std::size_t i = 0; i < 16; ++i) params[i] = run.x[i];
      best.channel = channel_from_generator(params);
    }
  }
  return best;
}

SlpCertificate certify_slp_full(const ComplexMatrix& rho,
                                const ComplexMatrix& hamiltonian,
                                const OracleOptions& options) {
  SlpCertificate certificate;
  certificate.m_test = certify_slp(rho, hamiltonian);
  OracleResult oracle = min_delta_e_oracle(rho, hamiltonian, options);
  certificate.oracle_min_delta_e = oracle.min_delta_e;
  certificate.oracle_channel = std::move(oracle.channel);
  certificate.oracle_stagnated = oracle.stagnated;

  const double scale = 1.0 + hamiltonian.frobenius_norm();
  if (std::abs(certificate.m_test.min_eigenvalue) > kAgreementBand * scale) {
    const bool oracle_verdict =
        certificate.oracle_min_delta_e >= -kOracleTol * scale;
    certificate.agreement = (certificate.m_test.psd_verdict == oracle_verdict);
  }
  return certificate;
}

}  // namespace qetlab
