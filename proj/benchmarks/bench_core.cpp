// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: eigendecomposition, the SLP test
// operator, certification, the channel oracle, circuit simulation, shot
// sampling, the protocol pipeline, and Zeno iteration.

#include <benchmark/benchmark.h>

#include <cmath>

#include "qetlab/qetlab.hpp"

namespace {

using namespace qetlab;

ComplexMatrix reference_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const ComplexVector singlet = {Complex(0, 0), Complex(inv_sqrt2, 0),
                                 Complex(-inv_sqrt2, 0), Complex(0, 0)};
  return alice_x_measurement(DensityMatrix::pure(singlet)).mixture().matrix();
}

void bench_eig_hermitian(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix m =
      random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(m));
  }
}
BENCHMARK(bench_eig_hermitian)->Arg(4)->Arg(8);

void bench_build_m(benchmark::State& state) {
  const ComplexMatrix rho = reference_state();
  const ComplexMatrix ham = build_flipflop(1.0, 1.5).matrix;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_m(rho, ham));
  }
}
BENCHMARK(bench_build_m);

void bench_certify_slp(benchmark::State& state) {
  const ComplexMatrix rho = reference_state();
  const ComplexMatrix ham = build_flipflop(1.0, 1.5).matrix;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_slp(rho, ham));
  }
}
BENCHMARK(bench_certify_slp);

void bench_oracle_small(benchmark::State& state) {
  const ComplexMatrix rho = reference_state();
  const ComplexMatrix ham = build_flipflop(1.0, 1.5).matrix;
  OracleOptions options;
  options.starts = 2;
  options.iterations = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_delta_e_oracle(rho, ham, options));
  }
}
BENCHMARK(bench_oracle_small);

void bench_simulate_dynamic(benchmark::State& state) {
  const Circuit circuit = build_dynamic_circuit(1.0, 1.5);
  const ComplexVector zero = {Complex(1, 0), Complex(0, 0), Complex(0, 0),
                              Complex(0, 0)};
  const ComplexMatrix rho = DensityMatrix::pure(zero).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(circuit, rho));
  }
}
BENCHMARK(bench_simulate_dynamic);

void bench_sample_pauli(benchmark::State& state) {
  const Circuit circuit = build_dynamic_circuit(1.0, 1.5);
  const ComplexVector zero = {Complex(1, 0), Complex(0, 0), Complex(0, 0),
                              Complex(0, 0)};
  const ComplexMatrix rho =
      simulate(circuit, DensityMatrix::pure(zero).matrix()).final_mixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_pauli(rho, "IZ", static_cast<int>(state.range(0)), 42));
  }
}
BENCHMARK(bench_sample_pauli)->Arg(20000);

void bench_run_protocol(benchmark::State& state) {
  ModelParams params;
  params.model = Model::FlipFlop;
  params.h = 1.0;
  params.kappa = 1.5;
  ProtocolOptions options;
  options.certify = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_protocol(params, options));
  }
}
BENCHMARK(bench_run_protocol);

void bench_zeno_evolve(benchmark::State& state) {
  const Hamiltonian ham = build_flipflop(1.0, 1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zeno_evolve(ham, '+', 1.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bench_zeno_evolve)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
