// Copyright 2026 The qbound developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "qbound/sampler.hpp"
#include "qbound/scenarios.hpp"

using namespace qbound;

namespace {

quantum::Observable make_observable(std::size_t dim, std::uint64_t key) {
    auto stream = sampler::RandomStream::substream(key, dim);
    return sampler::gue_observable(dim, stream);
}

void BM_hermitian_eigensystem(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto h = make_observable(dim, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::hermitian_eigensystem(h.mat()));
    }
}
BENCHMARK(BM_hermitian_eigensystem)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_bound_suite(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto a = make_observable(dim, 2);
    const auto b = make_observable(dim, 3);
    auto stream = sampler::RandomStream::substream(4, dim);
    const auto phi = sampler::haar_state(dim, stream);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::bound_suite(a, b, phi));
    }
}
BENCHMARK(BM_bound_suite)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_haar_state(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    auto stream = sampler::RandomStream(9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler::haar_state(dim, stream));
    }
}
BENCHMARK(BM_haar_state)->Arg(2)->Arg(16)->Arg(64);

void BM_gue_observable(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    auto stream = sampler::RandomStream(10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler::gue_observable(dim, stream));
    }
}
BENCHMARK(BM_gue_observable)->Arg(2)->Arg(16)->Arg(64);

void BM_tightness_scan_dim2(benchmark::State& state) {
    const auto samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler::tightness_scan({2, samples, 17}));
    }
}
BENCHMARK(BM_tightness_scan_dim2)->Arg(10)->Arg(100);

void BM_counterexample_search_qubit(benchmark::State& state) {
    const auto a = quantum::Observable::pauli_x();
    const auto b = quantum::Observable::pauli_y();
    for (auto _ : state) {
        benchmark::DoNotOptimize(scenarios::counterexample_search(a, b, 7, 1));
    }
}
BENCHMARK(BM_counterexample_search_qubit);

}  // namespace

BENCHMARK_MAIN();
