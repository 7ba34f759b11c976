// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qcorr/audit.hpp"
#include "qcorr/correlations.hpp"

namespace {

using namespace qcorr;

SystemShape qubits(int n) { return SystemShape(std::vector<int>(static_cast<std::size_t>(n), 2)); }

void BM_hermitian_eig(benchmark::State &state) {
    const auto rho = random_mixed(qubits(static_cast<int>(state.range(0))), 1 << state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(rho.matrix()));
}
BENCHMARK(BM_hermitian_eig)->DenseRange(2, 5);

void BM_partial_trace(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto rho = random_mixed(qubits(n), 4, 2);
    const SubsystemSet keep{1, n};
    for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, keep));
}
BENCHMARK(BM_partial_trace)->DenseRange(3, 6);

void BM_relative_entropy(benchmark::State &state) {
    const auto rho = random_mixed(qubits(3), 8, 3);
    const auto sigma = closest_product_state(rho);
    for (auto _ : state) benchmark::DoNotOptimize(relative_entropy(rho, sigma));
}
BENCHMARK(BM_relative_entropy);

void BM_entropy_table(benchmark::State &state) {
    const auto rho = random_pure(qubits(static_cast<int>(state.range(0))), 4);
    for (auto _ : state) benchmark::DoNotOptimize(EntropyTable(rho).retc());
}
BENCHMARK(BM_entropy_table)->DenseRange(3, 6);

void BM_audit_state(benchmark::State &state) {
    const auto rho = random_mixed(qubits(3), 8, 5);
    for (auto _ : state) benchmark::DoNotOptimize(audit_state(rho, "bench"));
}
BENCHMARK(BM_audit_state);

} // namespace
BENCHMARK_MAIN();
