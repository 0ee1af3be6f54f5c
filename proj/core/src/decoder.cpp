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

#include "cgrand/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cgrand/patterns.hpp"

namespace cgrand {

ReceivedFrame prepare_frame(std::span<const double> r) {
    ReceivedFrame frame;
    frame.r.assign(r.begin(), r.end());
    frame.hard = BitVec(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!std::isfinite(r[i])) throw std::invalid_argument("prepare_frame: non-finite channel observation");
        if (r[i] < 0) frame.hard.set(i);
    }
    frame.pi1.resize(r.size());
    std::iota(frame.pi1.begin(), frame.pi1.end(), std::size_t{1});
    std::stable_sort(frame.pi1.begin(), frame.pi1.end(),
                     [&](std::size_t a, std::size_t b) { return std::fabs(r[a - 1]) < std::fabs(r[b - 1]); });
    return frame;
}

GrandDecoder::GrandDecoder(const LinearCode& code)
    : code_(&code), syndrome_words_((code.parity_check.rows() + BitVec::kWordBits - 1) / BitVec::kWordBits) {
    columns_.assign(code.n * syndrome_words_, 0);
    for (std::size_t j = 0; j < code.parity_check.rows(); ++j) {
        for (std::size_t i : code.parity_check.row(j).support()) {
            columns_[i * syndrome_words_ + j / BitVec::kWordBits] |= std::uint64_t{1} << (j % BitVec::kWordBits);
        }
    }
}

std::vector<std::uint64_t> GrandDecoder::syndrome_words(const BitVec& x) const {
    std::vector<std::uint64_t> s(syndrome_words_, 0);
    for (std::size_t i : x.support()) {
        const std::uint64_t* col = &columns_[i * syndrome_words_];
        for (std::size_t w = 0; w < syndrome_words_; ++w) s[w] ^= col[w];
    }
    return s;
}

DecodeOutcome GrandDecoder::decode(const ReceivedFrame& frame, const DecodeBudget& budget) const {
    return run(frame, budget, nullptr, nullptr);
}

DecodeOutcome GrandDecoder::decode(const ReceivedFrame& frame, const DecodeBudget& budget,
                                   const ConstraintLayout& layout, const ConstraintTargets& targets) const {
    return run(frame, budget, &layout, &targets);
}

DecodeOutcome GrandDecoder::run(const ReceivedFrame& frame, const DecodeBudget& budget, const ConstraintLayout* layout,
                                const ConstraintTargets* targets) const {
    const std::size_t n = code_->n;
    if (frame.hard.size() != n || frame.pi1.size() != n) throw std::invalid_argument("decode: frame length mismatch");

    const bool constrained = layout != nullptr && layout->p() > 0;
    PatternGenerator gen = constrained ? PatternGenerator(n, *layout, *targets, frame.pi1) : PatternGenerator(n);
    const std::uint64_t max_checks =
        constrained ? budget.max_checks : std::min(budget.max_checks, budget.max_candidates);
    gen.set_candidate_limit(budget.max_candidates);

    const std::vector<std::uint64_t> s0 = syndrome_words(frame.hard);
    std::vector<std::uint64_t> s(syndrome_words_);

    DecodeOutcome out;
    while (out.queries_checked < max_checks && gen.next()) {
        ++out.queries_checked;
        s = s0;
        for (std::size_t part : gen.parts()) {
            const std::uint64_t* col = &columns_[(frame.pi1[part - 1] - 1) * syndrome_words_];
            for (std::size_t w = 0; w < syndrome_words_; ++w) s[w] ^= col[w];
        }
        if (std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; })) {
            BitVec c = frame.hard;
            for (std::size_t part : gen.parts()) c.flip(frame.pi1[part - 1] - 1);
            out.codeword = std::move(c);
            out.found_at_weight = gen.weight();
            break;
        }
    }
    out.candidates_generated = gen.candidates_generated();
    return out;
}

DecodeOutcome decode(const LinearCode& code, const ReceivedFrame& frame, const DecodeBudget& budget) {
    return GrandDecoder(code).decode(frame, budget);
}

DecodeOutcome decode(const LinearCode& code, const ReceivedFrame& frame, const DecodeBudget& budget,
                     const ConstraintLayout& layout, const ConstraintTargets& targets) {
    return GrandDecoder(code).decode(frame, budget, layout, targets);
}

}  // namespace cgrand
