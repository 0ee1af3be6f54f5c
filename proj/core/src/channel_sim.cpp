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

#include "cgrand/channel_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cgrand/constraints.hpp"

namespace cgrand {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

ChannelParams ChannelParams::from_ebn0(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("code rate must be in (0, 1]");
    if (!std::isfinite(ebn0_db)) throw std::invalid_argument("Eb/N0 must be finite");
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    return {ebn0_db, rate, std::sqrt(1.0 / (2.0 * rate * ebn0))};
}

FrameRng::FrameRng(std::uint64_t seed, std::uint64_t snr_index, std::uint64_t frame_index)
    : engine_(splitmix64(splitmix64(splitmix64(seed) ^ snr_index) ^ frame_index)) {}

FrameRng::FrameRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double FrameRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double FrameRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

std::vector<double> transmit(const BitVec& codeword, double sigma, FrameRng& rng) {
    std::vector<double> r(codeword.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = (codeword.test(i) ? -1.0 : 1.0) + sigma * rng.normal();
    }
    return r;
}

SimFrame make_frame(const LinearCode& code, double sigma, std::uint64_t seed, std::uint64_t snr_index,
                    std::uint64_t frame_index) {
    FrameRng rng(seed, snr_index, frame_index);
    BitVec message(code.k);
    for (std::size_t i = 0; i < code.k; ++i) message.set(i, rng.bit());
    BitVec codeword = code.encode(message);
    const std::vector<double> r = transmit(codeword, sigma, rng);
    return {std::move(message), std::move(codeword), prepare_frame(r)};
}

SimReport run_montecarlo(const LinearCode& code, const SimConfig& config, const ProgressCallback& progress) {
    if (config.frames == 0) throw std::invalid_argument("frames must be at least 1");
    if (config.snrs_db.empty()) throw std::invalid_argument("SNR list is empty");
    if (code.k == 0) throw std::invalid_argument("code has dimension 0");

    SimReport report;
    report.code_name = code.name;
    report.n = code.n;
    report.k = code.k;
    report.constraints = config.constraints;
    report.budget = config.budget;
    report.seed = config.seed;

    const ConstraintLayout layout = derive_constraints(code.parity_check, config.constraints);
    const GrandDecoder decoder(code);
    const double rate = static_cast<double>(code.k) / static_cast<double>(code.n);

    unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, config.frames));

    for (std::size_t s = 0; s < config.snrs_db.size(); ++s) {
        const ChannelParams params = ChannelParams::from_ebn0(config.snrs_db[s], rate);

        std::vector<SimPoint> partial(threads);
        auto worker = [&](unsigned t) {
            SimPoint& acc = partial[t];
            for (std::uint64_t f = t; f < config.frames; f += threads) {
                const SimFrame frame = make_frame(code, params.sigma, config.seed, s, f);
                DecodeOutcome out;
                if (layout.p() > 0) {
                    out = decoder.decode(frame.received, config.budget, layout,
                                         compute_targets(layout, frame.received.hard));
                } else {
                    out = decoder.decode(frame.received, config.budget);
                }
                ++acc.frames;
                acc.total_queries_checked += out.queries_checked;
                acc.total_candidates_generated += out.candidates_generated;
                if (out.abandoned()) ++acc.abandons;
                if (out.abandoned() || *out.codeword != frame.codeword) ++acc.block_errors;
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
            for (std::thread& th : pool) th.join();
        }

        SimPoint point;
        point.snr_db = config.snrs_db[s];
        for (const SimPoint& p : partial) {
            point.frames += p.frames;
            point.block_errors += p.block_errors;
            point.abandons += p.abandons;
            point.total_queries_checked += p.total_queries_checked;
            point.total_candidates_generated += p.total_candidates_generated;
        }
        report.points.push_back(point);
        if (progress) progress(point);
    }
    return report;
}

}  // namespace cgrand
