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

#ifndef CGRAND_CONSTRAINTS_HPP
#define CGRAND_CONSTRAINTS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cgrand/bitlin.hpp"

namespace cgrand {

/// Parity constraints are tracked as bits of a 64-bit word.
inline constexpr std::size_t kMaxConstraints = 64;

/// p rows of the dual code with pairwise disjoint supports, plus the
/// permutation π₂ that packs each support into a run of consecutive indices.
///
/// All positions here are 1-based. π₂ places the unconstrained positions
/// first (ascending), then each set in order (ascending within the set), so
/// set j occupies the interval [L_j, U_j] with U_j − L_j + 1 = |H_j|.
struct ConstraintLayout {
    std::size_t n = 0;
    std::vector<BitVec> rows;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> pi2;  // pi2[i - 1] is the image of position i
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
    /// The all-one word lies in the row space and seeded the derivation
    /// (for p = 1 it is rows[0]; larger p split it).
    bool has_overall_parity = false;

    std::size_t p() const { return rows.size(); }
    std::size_t image(std::size_t position) const { return pi2[position - 1]; }

    /// Index of the constraint whose interval holds π₂(position), or -1.
    int constraint_of(std::size_t position) const;
};

/// Per-frame target parities s_j(0), bit j for constraint j.
struct ConstraintTargets {
    std::size_t p = 0;
    std::uint64_t bits = 0;

    bool operator[](std::size_t j) const { return (bits >> j) & 1U; }
};

/// Thrown when fewer disjoint constraints than requested can be derived.
class InsufficientConstraints : public std::runtime_error {
   public:
    InsufficientConstraints(std::size_t requested, std::size_t achievable);
    std::size_t requested() const { return requested_; }
    std::size_t achievable() const { return achievable_; }

   private:
    std::size_t requested_;
    std::size_t achievable_;
};

/// Builds π₂ and the intervals for rows with pairwise disjoint, nonempty
/// supports. Throws std::invalid_argument otherwise.
ConstraintLayout make_layout(std::size_t n, std::vector<BitVec> rows);

/// Greedy disjoint-constraint extraction from the row space of `h`.
///
/// Starts from the all-one word when it lies in the row space (otherwise the
/// heaviest row of `h`). While fewer than `p` rows are held, takes the
/// heaviest held row r (lowest slot on ties) and searches single rows of `h`,
/// then XOR pairs of rows, for a word s with a proper nonempty subset
/// support of supp(r). The candidate with weight closest to |r|/2 wins
/// (earliest candidate on ties); r is replaced by r ⊕ s and s is appended.
/// If r has no such subset the next-heaviest row is tried.
///
/// Throws InsufficientConstraints when fewer than `p` rows can be produced.
ConstraintLayout derive_constraints(const BitMatrix& h, std::size_t p);

/// Like derive_constraints but returns as many rows (<= p) as the search
/// finds.
ConstraintLayout derive_constraints_upto(const BitMatrix& h, std::size_t p);

/// s_j(0): parity of the hard decision over each constraint set.
ConstraintTargets compute_targets(const ConstraintLayout& layout, const BitVec& v);

/// Exhaustive count of ê ∈ F_2^n with |H_j ∩ supp(ê)| mod 2 = s_j(0) for
/// every j. Limited to n <= 24.
std::uint64_t count_search_space(std::size_t n, const ConstraintLayout& layout, const ConstraintTargets& targets);

inline constexpr std::size_t kMaxEnumerationLength = 24;

/// Syndrome of v ⊕ ê from the hard-decision syndrome s(0):
/// s_j(ê) = (XOR over i ∈ supp(ê) of h_{j,i}) ⊕ s_j(0). `support` holds
/// 1-based positions.
BitVec relative_syndrome(const BitMatrix& h, const BitVec& syndrome_zero, std::span<const std::size_t> support);

}  // namespace cgrand

#endif  // CGRAND_CONSTRAINTS_HPP
