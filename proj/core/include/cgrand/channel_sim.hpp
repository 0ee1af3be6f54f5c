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

#ifndef CGRAND_CHANNEL_SIM_HPP
#define CGRAND_CHANNEL_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cgrand/bitlin.hpp"
#include "cgrand/codes.hpp"
#include "cgrand/decoder.hpp"

namespace cgrand {

/// BPSK over AWGN at a given Eb/N0; σ² = 1 / (2 · rate · 10^(Eb/N0 / 10)).
struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 1.0;
    double sigma = 1.0;

    static ChannelParams from_ebn0(double ebn0_db, double rate);
};

/// Per-frame random stream: std::mt19937_64 seeded with a splitmix64 mix of
/// (seed, snr index, frame index). Normals use the Marsaglia polar method on
/// 53-bit uniforms so streams are bit-identical across standard libraries.
class FrameRng {
   public:
    static constexpr const char* kAlgorithm = "mt19937_64/splitmix64-substream/marsaglia-polar";

    FrameRng(std::uint64_t seed, std::uint64_t snr_index, std::uint64_t frame_index);
    explicit FrameRng(std::uint64_t seed);

    double uniform();  // [0, 1)
    double normal();
    bool bit() { return (engine_() >> 63) != 0; }

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// r_i = (1 − 2c_i) + σ·g_i.
std::vector<double> transmit(const BitVec& codeword, double sigma, FrameRng& rng);

/// One simulated frame: a uniformly random message, its codeword and the
/// prepared channel output.
struct SimFrame {
    BitVec message;
    BitVec codeword;
    ReceivedFrame received;
};

SimFrame make_frame(const LinearCode& code, double sigma, std::uint64_t seed, std::uint64_t snr_index,
                    std::uint64_t frame_index);

struct SimConfig {
    std::vector<double> snrs_db;
    std::uint64_t frames = 0;
    DecodeBudget budget;
    std::size_t constraints = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct SimPoint {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t block_errors = 0;
    std::uint64_t abandons = 0;
    std::uint64_t total_queries_checked = 0;
    std::uint64_t total_candidates_generated = 0;

    double bler() const { return frames ? static_cast<double>(block_errors) / static_cast<double>(frames) : 0.0; }
    double avg_queries_checked() const {
        return frames ? static_cast<double>(total_queries_checked) / static_cast<double>(frames) : 0.0;
    }
    double avg_candidates_generated() const {
        return frames ? static_cast<double>(total_candidates_generated) / static_cast<double>(frames) : 0.0;
    }
};

struct SimReport {
    std::string code_name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t constraints = 0;
    DecodeBudget budget;
    std::uint64_t seed = 0;
    std::string rng_algorithm = FrameRng::kAlgorithm;
    /// Patterns with a part above n are never materialized and not counted.
    std::string candidate_accounting = "parts-within-n";
    /// Means run over every frame; abandoned frames add their consumed counts.
    std::string averaging = "all-frames-including-abandoned";
    std::vector<SimPoint> points;
};

using ProgressCallback = std::function<void(const SimPoint&)>;

/// Monte Carlo over the configured SNR grid. Frame f at SNR index s uses
/// FrameRng(seed, s, f), so results do not depend on thread scheduling and
/// runs with different constraint counts see identical noise. Throws
/// InsufficientConstraints when the code cannot supply `constraints` rows.
SimReport run_montecarlo(const LinearCode& code, const SimConfig& config, const ProgressCallback& progress = {});

}  // namespace cgrand

#endif  // CGRAND_CHANNEL_SIM_HPP
