// Copyright 2026 The symcomm Authors
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

#include "symcomm/descriptors.h"
#include "symcomm/search.h"

namespace {

using namespace symcomm;

Instance single_marked(std::size_t n, std::size_t at) {
    BitString x(n), y(n);
    x.set(at, true);
    y.set(at, true);
    return Instance::and2(x, y);
}

void BM_FindOneLedger(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Instance inst = single_marked(n, n / 3);
    SearchOptions o;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RandomTape tape = RandomTape::shared(seed++);
        Channel c(false);
        benchmark::DoNotOptimize(find_one(inst, tape, c, o));
    }
}
BENCHMARK(BM_FindOneLedger)->RangeMultiplier(4)->Range(8, 1 << 14);

void BM_FindOneSim(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Instance inst = single_marked(n, n / 3);
    SearchOptions o;
    o.mode = CostMode::sim;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RandomTape tape = RandomTape::shared(seed++);
        Channel c(false);
        benchmark::DoNotOptimize(find_one(inst, tape, c, o));
    }
}
BENCHMARK(BM_FindOneSim)->RangeMultiplier(2)->Range(4, 32);

void BM_FindMoreUnmarked(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Instance inst = Instance::and2(BitString(n), BitString(n, true));
    SearchOptions o;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        RandomTape tape = RandomTape::shared(seed++);
        Channel c(false);
        benchmark::DoNotOptimize(find_more(inst, 2, tape, c, o));
    }
}
BENCHMARK(BM_FindMoreUnmarked)->RangeMultiplier(4)->Range(8, 1 << 12);

}  // namespace
