// Copyright 2026 The qduadic Authors
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

#include "qduadic/distance.h"
#include "qduadic/duadic.h"

namespace {

using namespace qduadic;

CyclicCode odd_like_code(std::uint32_t n, std::uint64_t q) {
    auto s = find_splittings(n, q, 1).front();
    return make_cyclic_code(n, make_field_of_order(q), DefiningSet(n, q, s.s0));
}

void BM_OddLikeByEnumeration(benchmark::State& state) {
    auto code = odd_like_code(static_cast<std::uint32_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_odd_like_weight(code).lo);
    }
}
BENCHMARK(BM_OddLikeByEnumeration)->Arg(23)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_OddLikeBySupportSearch(benchmark::State& state) {
    auto code = odd_like_code(static_cast<std::uint32_t>(state.range(0)), 2);
    for (auto _ : state) {
        auto r = min_odd_like_weight_by_support_search(code);
        benchmark::DoNotOptimize(r.lo);
        state.counters["candidates"] = static_cast<double>(r.work);
    }
}
BENCHMARK(BM_OddLikeBySupportSearch)->Arg(23)->Arg(31)->Arg(47)->Unit(benchmark::kMillisecond);

void BM_BuildQuartet(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    auto s = find_splittings(n, 2, 1).front();
    auto f = make_field(2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_quartet(s, f).d0.k());
    }
}
BENCHMARK(BM_BuildQuartet)->Arg(49)->Arg(73)->Arg(127)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
