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


#include <gtest/gtest.h>

#include <cmath>

#include "cgrand/channel_sim.hpp"
#include "cgrand/constraints.hpp"

namespace cgrand {
namespace {

TEST(Channel, SigmaFromEbN0) {
    const ChannelParams p = ChannelParams::from_ebn0(5.0, 106.0 / 128.0);
    EXPECT_NEAR(p.sigma * p.sigma, 1.0 / (2.0 * (106.0 / 128.0) * std::pow(10.0, 0.5)), 1e-15);
    EXPECT_NEAR(ChannelParams::from_ebn0(0.0, 1.0).sigma, std::sqrt(0.5), 1e-15);
    EXPECT_THROW(ChannelParams::from_ebn0(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(ChannelParams::from_ebn0(1.0, 1.5), std::invalid_argument);
    EXPECT_THROW(ChannelParams::from_ebn0(NAN, 0.5), std::invalid_argument);
}

TEST(Rng, SubstreamsAreReproducibleAndDistinct) {
    FrameRng a(1, 2, 3), b(1, 2, 3), c(1, 2, 4), d(1, 3, 3);
    for (int i = 0; i < 100; ++i) {
        const double x = a.normal();
        EXPECT_EQ(x, b.normal());
        (void)c;
    }
    FrameRng e(1, 2, 3);
    EXPECT_NE(e.uniform(), c.uniform());
    FrameRng g(1, 2, 3);
    EXPECT_NE(g.uniform(), d.uniform());
}

TEST(Rng, KnownFirstDraw) {
    // splitmix64 reference value for input 0.
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Rng, NormalMoments) {
    FrameRng rng(9);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sq += x * x;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 0.0, 4.0 / std::sqrt(n));
    EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);
}

TEST(Rng, UniformRange) {
    FrameRng rng(10);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Transmit, NoiselessIsAntipodal) {
    FrameRng rng(11);
    const BitVec c = BitVec::from_string("0110");
    EXPECT_EQ(transmit(c, 0.0, rng), (std::vector<double>{1.0, -1.0, -1.0, 1.0}));
}

TEST(Transmit, ZeroCodewordMean) {
    FrameRng rng(12);
    const double sigma = 0.8;
    const std::vector<double> r = transmit(BitVec(100000), sigma, rng);
    double sum = 0.0;
    for (double x : r) sum += x;
    EXPECT_NEAR(sum / static_cast<double>(r.size()), 1.0, 3.0 * sigma / std::sqrt(static_cast<double>(r.size())));
}

TEST(Transmit, FixedSeedIsBitIdentical) {
    FrameRng a(13, 0, 0), b(13, 0, 0);
    EXPECT_EQ(transmit(BitVec::ones(64), 0.7, a), transmit(BitVec::ones(64), 0.7, b));
}

TEST(MakeFrame, CodewordMatchesMessage) {
    const LinearCode code = build_ebch(7, 3);
    const SimFrame f = make_frame(code, 1e-9, 14, 0, 5);
    EXPECT_EQ(f.codeword, code.encode(f.message));
    EXPECT_EQ(f.received.hard, f.codeword);
    EXPECT_GT(f.message.weight(), 0u);
    const SimFrame g = make_frame(code, 1e-9, 14, 0, 5);
    EXPECT_EQ(f.received.r, g.received.r);
}

SimConfig small_config(std::size_t p) {
    SimConfig config;
    config.snrs_db = {3.0, 4.0};
    config.frames = 200;
    config.budget = DecodeBudget::matched(2000);
    config.constraints = p;
    config.seed = 15;
    config.threads = 1;
    return config;
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults) {
    const LinearCode code = build_ebch(7, 3);
    SimConfig one = small_config(1);
    SimConfig many = one;
    many.threads = 4;
    const SimReport a = run_montecarlo(code, one);
    const SimReport b = run_montecarlo(code, many);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        EXPECT_EQ(a.points[i].block_errors, b.points[i].block_errors);
        EXPECT_EQ(a.points[i].total_queries_checked, b.points[i].total_queries_checked);
        EXPECT_EQ(a.points[i].total_candidates_generated, b.points[i].total_candidates_generated);
        EXPECT_EQ(a.points[i].abandons, b.points[i].abandons);
    }
}

TEST(MonteCarlo, PairedNoiseKeepsBlerAndCutsQueries) {
    const LinearCode code = build_ebch(7, 3);
    const SimReport base = run_montecarlo(code, small_config(0));
    for (std::size_t p : {1u, 2u}) {
        const SimReport r = run_montecarlo(code, small_config(p));
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            EXPECT_EQ(r.points[i].block_errors, base.points[i].block_errors);
            EXPECT_EQ(r.points[i].abandons, base.points[i].abandons);
            EXPECT_LT(r.points[i].total_queries_checked, base.points[i].total_queries_checked);
            EXPECT_EQ(r.points[i].total_candidates_generated, base.points[i].total_candidates_generated);
        }
    }
}

TEST(MonteCarlo, NoiselessLimit) {
    const LinearCode code = build_ebch(7, 3);
    for (std::size_t p : {0u, 1u, 2u}) {
        SimConfig config = small_config(p);
        config.snrs_db = {60.0};
        const SimReport r = run_montecarlo(code, config);
        EXPECT_EQ(r.points[0].bler(), 0.0);
        EXPECT_EQ(r.points[0].avg_queries_checked(), 1.0);
    }
}

TEST(MonteCarlo, BlerNonIncreasingInSnr) {
    const LinearCode code = build_ebch(7, 3);
    SimConfig config = small_config(2);
    config.snrs_db = {2.0, 3.0, 4.0, 5.0};
    config.frames = 400;
    config.threads = 0;
    const SimReport r = run_montecarlo(code, config);
    for (std::size_t i = 1; i < r.points.size(); ++i) {
        const double prev = r.points[i - 1].bler();
        const double se = std::sqrt(prev * (1.0 - prev) / static_cast<double>(r.points[i - 1].frames));
        EXPECT_LE(r.points[i].bler(), prev + se) << r.points[i].snr_db;
    }
}

TEST(MonteCarlo, ReportMetadataAndErrors) {
    const LinearCode code = build_ebch(3, 1);
    SimConfig config = small_config(1);
    const SimReport r = run_montecarlo(code, config);
    EXPECT_EQ(r.rng_algorithm, "mt19937_64/splitmix64-substream/marsaglia-polar");
    EXPECT_EQ(r.averaging, "all-frames-including-abandoned");
    EXPECT_EQ(r.candidate_accounting, "parts-within-n");
    EXPECT_EQ(r.n, 8u);
    EXPECT_EQ(r.k, 4u);
    EXPECT_EQ(r.points.size(), 2u);
    EXPECT_EQ(r.points[0].frames, 200u);

    config.constraints = 9;
    EXPECT_THROW(run_montecarlo(code, config), InsufficientConstraints);
    config.constraints = 0;
    config.frames = 0;
    EXPECT_THROW(run_montecarlo(code, config), std::invalid_argument);
}

}  // namespace
}  // namespace cgrand
