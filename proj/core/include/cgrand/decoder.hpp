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

#ifndef CGRAND_DECODER_HPP
#define CGRAND_DECODER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cgrand/bitlin.hpp"
#include "cgrand/codes.hpp"
#include "cgrand/constraints.hpp"

namespace cgrand {

/// Channel observations with their hard decision and reliability order.
struct ReceivedFrame {
    std::vector<double> r;
    BitVec hard;                   // bit i is 1 iff r_i < 0
    std::vector<std::size_t> pi1;  // pi1[rank - 1]: 1-based position, rank 1 least reliable
};

/// Hard-decides r (BPSK 0 → +1, 1 → −1) and sorts positions by ascending
/// |r_i|, lower index first on ties. Throws on non-finite input.
ReceivedFrame prepare_frame(std::span<const double> r);

/// Abandonment budgets: `max_checks` bounds codebook checks (b),
/// `max_candidates` bounds considered patterns including discarded ones (b′).
struct DecodeBudget {
    std::uint64_t max_checks = 0;
    std::uint64_t max_candidates = 0;

    static DecodeBudget matched(std::uint64_t b) { return {b, b}; }
};

struct DecodeOutcome {
    std::optional<BitVec> codeword;  // nullopt when abandoned
    std::uint64_t queries_checked = 0;
    std::uint64_t candidates_generated = 0;
    std::optional<std::size_t> found_at_weight;

    bool abandoned() const { return !codeword.has_value(); }
};

/// ORBGRAND query loop over a fixed code. Every candidate that reaches the
/// codebook check is tested against the full parity-check matrix, so the
/// optional constraints only skip patterns that cannot pass.
class GrandDecoder {
   public:
    explicit GrandDecoder(const LinearCode& code);

    const LinearCode& code() const { return *code_; }

    /// Unconstrained decoding; the effective check budget is min(b, b′).
    DecodeOutcome decode(const ReceivedFrame& frame, const DecodeBudget& budget) const;

    /// Constrained decoding. `targets` must be compute_targets(layout,
    /// frame.hard).
    DecodeOutcome decode(const ReceivedFrame& frame, const DecodeBudget& budget, const ConstraintLayout& layout,
                         const ConstraintTargets& targets) const;

    /// H·x as packed words.
    std::vector<std::uint64_t> syndrome_words(const BitVec& x) const;

   private:
    DecodeOutcome run(const ReceivedFrame& frame, const DecodeBudget& budget, const ConstraintLayout* layout,
                      const ConstraintTargets* targets) const;

    const LinearCode* code_;
    std::size_t syndrome_words_ = 0;
    std::vector<std::uint64_t> columns_;  // column i of H at [i * syndrome_words_, ...)
};

DecodeOutcome decode(const LinearCode& code, const ReceivedFrame& frame, const DecodeBudget& budget);
DecodeOutcome decode(const LinearCode& code, const ReceivedFrame& frame, const DecodeBudget& budget,
                     const ConstraintLayout& layout, const ConstraintTargets& targets);

}  // namespace cgrand

#endif  // CGRAND_DECODER_HPP
