// Copyright 2026 The cgrand Authors
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

#include "cgrand/channel_sim.hpp"
#include "cgrand/codes.hpp"
#include "cgrand/constraints.hpp"
#include "cgrand/decoder.hpp"
#include "cgrand/patterns.hpp"

namespace {

using namespace cgrand;

const LinearCode& ebch128() {
    static const LinearCode code = build_ebch(7, 3);
    return code;
}

void BM_GeneratorUnconstrained(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        PatternGenerator gen(n);
        gen.set_candidate_limit(100000);
        std::size_t sink = 0;
        while (gen.next()) sink += gen.weight();
        benchmark::DoNotOptimize(sink);
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_GeneratorUnconstrained)->Arg(64)->Arg(128);

void BM_GeneratorConstrained(benchmark::State& state) {
    const auto p = static_cast<std::size_t>(state.range(0));
    const ConstraintLayout layout = derive_constraints(ebch128().parity_check, p);
    const SimFrame frame = make_frame(ebch128(), 0.6, 1, 0, 0);
    const ConstraintTargets targets = compute_targets(layout, frame.received.hard);
    for (auto _ : state) {
        PatternGenerator gen(128, layout, targets, frame.received.pi1);
        gen.set_candidate_limit(100000);
        std::size_t sink = 0;
        while (gen.next()) sink += gen.weight();
        benchmark::DoNotOptimize(sink);
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_GeneratorConstrained)->Arg(1)->Arg(2);

// Decodes a fixed batch of 5.0 dB frames; items are codebook checks.
void BM_DecodeEbch128(benchmark::State& state) {
    const auto p = static_cast<std::size_t>(state.range(0));
    const LinearCode& code = ebch128();
    const ConstraintLayout layout = derive_constraints(code.parity_check, p);
    const GrandDecoder dec(code);
    const double sigma = ChannelParams::from_ebn0(5.0, 106.0 / 128.0).sigma;
    std::vector<SimFrame> frames;
    for (std::uint64_t f = 0; f < 256; ++f) frames.push_back(make_frame(code, sigma, 2, 0, f));

    std::uint64_t checks = 0;
    for (auto _ : state) {
        for (const SimFrame& frame : frames) {
            const DecodeOutcome out =
                p == 0 ? dec.decode(frame.received, DecodeBudget::matched(100000))
                       : dec.decode(frame.received, DecodeBudget::matched(100000), layout,
                                    compute_targets(layout, frame.received.hard));
            checks += out.queries_checked;
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(checks));
    state.counters["frames/s"] =
        benchmark::Counter(static_cast<double>(state.iterations() * frames.size()), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_DecodeEbch128)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DeriveConstraints(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(derive_constraints(ebch128().parity_check, 2));
}
BENCHMARK(BM_DeriveConstraints)->Unit(benchmark::kMicrosecond);

void BM_BuildEbch128(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_ebch(7, 3));
}
BENCHMARK(BM_BuildEbch128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
