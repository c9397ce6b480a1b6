// Copyright 2026 The qromlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qromlab/qsim/gate.hpp"
#include "qromlab/qsim/projector.hpp"
#include "qromlab/qsim/state_vector.hpp"

using namespace qromlab;
using namespace qromlab::qsim;

namespace {

RegisterLayout layout_for(int64_t log_y) {
    return RegisterLayout(16, index_t{1} << log_y, 16, 4);
}

Amplitudes random_amplitudes(const RegisterLayout &l) {
    Rng rng(1);
    std::normal_distribution<double> normal;
    Amplitudes a(l.total());
    for (auto &v : a) {
        v = amp_t(normal(rng), normal(rng));
    }
    return a;
}

template <bool Parallel> void BM_DenseGate(benchmark::State &state) {
    const auto l = layout_for(state.range(0));
    Rng rng(2);
    const auto g = Gate::dense(l, {Register::X, Register::Z}, haar_unitary(256, rng));
    Amplitudes a = random_amplitudes(l);
    for (auto _ : state) {
        if constexpr (Parallel) {
            g.apply(a);
        } else {
            g.apply_serial(a);
        }
        benchmark::DoNotOptimize(a.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(l.total()));
}

template <bool Parallel> void BM_XorOracle(benchmark::State &state) {
    const auto l = layout_for(state.range(0));
    Rng rng(3);
    std::vector<std::uint64_t> table(l.dim(Register::X));
    for (auto &v : table) {
        v = uniform_below(rng, l.dim(Register::Y));
    }
    const Amplitudes in = random_amplitudes(l);
    Amplitudes out(l.total());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::omp::apply_xor_oracle(l, table, in, out);
        } else {
            kernels::serial::apply_xor_oracle(l, table, in, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(l.total()));
}

template <bool Parallel> void BM_Norm(benchmark::State &state) {
    const auto l = layout_for(state.range(0));
    const Amplitudes a = random_amplitudes(l);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Parallel ? kernels::omp::norm2(a) : kernels::serial::norm2(a));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(l.total()));
}

template <bool Parallel> void BM_Marginal(benchmark::State &state) {
    const auto l = layout_for(state.range(0));
    const Amplitudes a = random_amplitudes(l);
    for (auto _ : state) {
        auto m = Parallel ? kernels::omp::marginal(l, Register::Z, a)
                          : kernels::serial::marginal(l, Register::Z, a);
        benchmark::DoNotOptimize(m.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(l.total()));
}

} // namespace

BENCHMARK(BM_DenseGate<false>)->Name("dense_gate/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_DenseGate<true>)->Name("dense_gate/omp")->DenseRange(4, 8, 2);
BENCHMARK(BM_XorOracle<false>)->Name("xor_oracle/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_XorOracle<true>)->Name("xor_oracle/omp")->DenseRange(4, 8, 2);
BENCHMARK(BM_Norm<false>)->Name("norm2/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_Norm<true>)->Name("norm2/omp")->DenseRange(4, 8, 2);
BENCHMARK(BM_Marginal<false>)->Name("marginal/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_Marginal<true>)->Name("marginal/omp")->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
