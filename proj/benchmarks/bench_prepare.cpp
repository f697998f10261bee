// Copyright 2026 The cliffload Authors
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

#include <string>

#include <benchmark/benchmark.h>

#include "cliffload/chem.hpp"
#include "cliffload/loader.hpp"
#include "cliffload/ortho.hpp"
#include "cliffload/sim.hpp"

namespace {

using namespace cliffload;

// Loader synthesis plus simulation, N qubits, d = 2, L = 2.
void BM_PrepareCorrelated(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const OrthonormalMatrix g = random_orthonormal(n / 2, 1, 1);
    for (auto _ : state) {
        StateVector psi = run(prepare_state_circuit(g, 2, LadderStyle::LogTree));
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_PrepareCorrelated)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_SlaterPrepare(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const OrthonormalMatrix m = random_orthonormal(n, n / 4, 2);
    for (auto _ : state) {
        StateVector psi = run(prepare_state_circuit(m, 1, LadderStyle::LogTree));
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
}
BENCHMARK(BM_SlaterPrepare)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Expectation20(benchmark::State &state) {
    const MolecularHamiltonian h =
        jw_hamiltonian(read_fcidump(std::string(CLIFFLOAD_DATA_DIR) + "/h2_ccpvdz_1.4bohr.fcidump"));
    const StateVector psi = run(prepare_state_circuit(random_orthonormal(10, 1, 3), 2, LadderStyle::LogTree));
    const auto method = static_cast<ExpectationMethod>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation(h.pauli, psi, method));
    }
    state.counters["terms"] = static_cast<double>(h.pauli.size());
}
BENCHMARK(BM_Expectation20)
    ->Arg(static_cast<int>(ExpectationMethod::Dense))
    ->Arg(static_cast<int>(ExpectationMethod::Sparse))
    ->Arg(static_cast<int>(ExpectationMethod::Auto))
    ->Unit(benchmark::kMillisecond);

void BM_JwHamiltonian(benchmark::State &state) {
    const FciDump f = read_fcidump(std::string(CLIFFLOAD_DATA_DIR) + "/h4_sto3g_1.4bohr.fcidump");
    for (auto _ : state) {
        benchmark::DoNotOptimize(jw_hamiltonian(f).pauli.size());
    }
}
BENCHMARK(BM_JwHamiltonian)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
