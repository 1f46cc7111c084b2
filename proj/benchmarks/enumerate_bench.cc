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

#include <algorithm>

#include <benchmark/benchmark.h>

#include "qduadic/duadic.h"
#include "qduadic/enumerate.h"

namespace {

using namespace qduadic;

CyclicCode odd_like_code(std::uint32_t n) {
    auto s = find_splittings(n, 2, 1).front();
    return make_cyclic_code(n, make_field(2, 1), DefiningSet(n, 2, s.s0));
}

// Gray walk: one row addition per codeword.
void BM_GrayWalk(benchmark::State& state) {
    auto code = odd_like_code(static_cast<std::uint32_t>(state.range(0)));
    EnumerateOptions opts;
    opts.workers = static_cast<unsigned>(state.range(1));
    std::uint64_t visited = 0;
    for (auto _ : state) {
        auto out = enumerate_codewords(code.generator_matrix(), nullptr, opts);
        benchmark::DoNotOptimize(out.best_weight);
        visited += out.visited;
    }
    state.counters["codewords_per_s"] = benchmark::Counter(static_cast<double>(visited), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_GrayWalk)->Args({23, 1})->Args({31, 1})->Args({31, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

// Baseline: re-encode every message from scratch.
void BM_NaiveReencode(benchmark::State& state) {
    auto code = odd_like_code(static_cast<std::uint32_t>(state.range(0)));
    const auto& g = code.generator_matrix();
    const std::uint64_t total = std::uint64_t{1} << g.rows();
    for (auto _ : state) {
        std::uint32_t best = g.cols();
        for (std::uint64_t m = 1; m < total; ++m) {
            std::uint32_t weight = 0;
            for (std::size_t c = 0; c < g.cols(); ++c) {
                Elem acc = 0;
                for (std::size_t r = 0; r < g.rows(); ++r) {
                    acc ^= ((m >> r) & 1) ? g.at(r, c) : 0;
                }
                weight += acc != 0;
            }
            best = std::min(best, weight);
        }
        benchmark::DoNotOptimize(best);
    }
    state.counters["codewords_per_s"] =
        benchmark::Counter(static_cast<double>(total - 1) * state.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_NaiveReencode)->Arg(23)->Arg(31)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
