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

#ifndef CGRAND_PATTERNS_HPP
#define CGRAND_PATTERNS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cgrand/constraints.hpp"

namespace cgrand {

/// A candidate error pattern in the reliability-ranked domain: the support of
/// z as distinct parts (ranks, 1 = least reliable), listed in decreasing
/// order. Its logistic weight is the sum of the parts.
///
/// `partial_parities` caches the constraint parities over the parts that
/// remain after dropping the `excluded` largest ones: one for the node that
/// is about to have its largest part split, two for a node produced as an
/// (alternative) pair whose two largest parts are still being varied.
struct PatternNode {
    std::vector<std::size_t> parts;
    std::size_t weight = 0;
    std::uint64_t partial_parities = 0;
    std::size_t excluded = 0;

    /// Parts covered by `partial_parities`.
    std::span<const std::size_t> base() const { return std::span(parts).subspan(excluded); }
    std::span<const std::size_t> excluded_parts() const { return std::span(parts).first(excluded); }
};

/// Per-frame lookup from rank to the set of constraints it falls in: bit j of
/// mask(rank) is set iff L_j <= π₂(π₁(rank)) <= U_j. `pi1[rank - 1]` is the
/// 1-based bit position of that rank.
class RankMembership {
   public:
    RankMembership() = default;
    explicit RankMembership(std::size_t n);
    RankMembership(const ConstraintLayout& layout, std::span<const std::size_t> pi1);

    std::size_t n() const { return masks_.empty() ? 0 : masks_.size() - 1; }
    std::uint64_t mask(std::size_t rank) const { return masks_[rank]; }
    std::uint64_t parity(std::span<const std::size_t> parts) const;

   private:
    std::vector<std::uint64_t> masks_;  // index 0 unused
};

/// Adds one or two new parts to the node's base: the parities of
/// base ∪ new_parts, obtained from `node.partial_parities` by flipping
/// constraint j once for every new part whose image lies in [L_j, U_j] (two
/// hits cancel). Rejects parts already in the base, repeated new parts and
/// parts outside [1, n].
std::uint64_t progressive_update(const PatternNode& node, std::span<const std::size_t> new_parts,
                                 const ConstraintLayout& layout, std::span<const std::size_t> pi1);

/// From-scratch validity: for every j, |{i ∈ parts : π₂(π₁(i)) ∈ [L_j, U_j]}|
/// mod 2 equals targets[j]. Constraints are checked shortest interval first.
bool check_node(std::span<const std::size_t> parts, const ConstraintLayout& layout, const ConstraintTargets& targets,
                std::span<const std::size_t> pi1);
bool check_node(const PatternNode& node, const ConstraintLayout& layout, const ConstraintTargets& targets,
                std::span<const std::size_t> pi1);

/// Enumerates error patterns in nondecreasing logistic weight: the empty
/// pattern, then every set of distinct parts in [1, n], ending with
/// {1, …, n} at weight n(n+1)/2.
///
/// Within one weight w the order is a depth-first walk of the split tree:
/// the root is {w}; a node P ∪ {m} (every part of P below m) has children
/// P ∪ {d, m − d} for d = max(P) + 1, max(P) + 2, … while d < m − d. The
/// first child is the phase-1 split of the largest part; later children are
/// the phase-2 alternatives for the same pair. Nodes whose largest part
/// exceeds n are expanded but never materialized, so they are not counted.
///
/// With constraints, every materialized pattern counts toward
/// candidates_generated; only those meeting every target parity are emitted.
class PatternGenerator {
   public:
    static constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

    explicit PatternGenerator(std::size_t n);
    PatternGenerator(std::size_t n, const ConstraintLayout& layout, const ConstraintTargets& targets,
                     std::span<const std::size_t> pi1);

    /// Stops emission once `limit` patterns have been considered.
    void set_candidate_limit(std::uint64_t limit) { limit_ = limit; }
    /// Restarts the walk at the first node of weight w. Counters are kept.
    void seek_weight(std::size_t weight);

    /// Advances to the next emitted pattern. Returns false when the
    /// enumeration is exhausted or the candidate limit is reached.
    bool next();

    /// Steps to the next considered pattern whether or not it meets the
    /// targets (it still counts toward candidates_generated, but not toward
    /// candidates_emitted). Returns false like next().
    bool advance();
    /// The current pattern meets every target parity.
    bool satisfied() const { return parity_ == target_; }

    std::size_t n() const { return n_; }
    std::size_t max_weight() const { return n_ * (n_ + 1) / 2; }
    bool constrained() const { return constrained_; }

    /// Current pattern, decreasing.
    std::span<const std::size_t> parts() const;
    std::size_t weight() const { return weight_; }
    /// Constraint parities of the current pattern.
    std::uint64_t parities() const { return parity_; }
    PatternNode node() const;

    std::uint64_t candidates_generated() const { return generated_; }
    std::uint64_t candidates_emitted() const { return emitted_; }
    bool exhausted() const { return exhausted_; }
    bool limit_reached() const { return limit_reached_; }

   private:
    struct Frame {
        std::size_t remainder;
        std::size_t next_split;
        std::uint64_t prefix_parity;
    };

    bool advance_node();
    void begin_weight();
    std::size_t sum_above(std::size_t d) const { return max_weight() - d * (d + 1) / 2; }

    std::size_t n_;
    bool constrained_ = false;
    RankMembership membership_;
    std::uint64_t target_ = 0;

    std::uint64_t limit_ = kNoLimit;
    std::uint64_t generated_ = 0;
    std::uint64_t emitted_ = 0;
    bool exhausted_ = false;
    bool limit_reached_ = false;

    std::size_t weight_ = 0;
    bool weight_started_ = false;
    std::vector<Frame> frames_;
    std::vector<std::size_t> path_;  // increasing prefix of the current node

    std::size_t largest_ = 0;
    std::uint64_t parity_ = 0;
    std::uint64_t partial_ = 0;
    std::size_t excluded_ = 0;
    mutable std::vector<std::size_t> parts_;
    mutable bool parts_stale_ = false;
};

}  // namespace cgrand

#endif  // CGRAND_PATTERNS_HPP
