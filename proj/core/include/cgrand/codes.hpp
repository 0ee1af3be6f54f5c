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

#ifndef CGRAND_CODES_HPP
#define CGRAND_CODES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cgrand/bitlin.hpp"

namespace cgrand {

/// Binary linear block code with generator G (k×n) and parity-check H
/// ((n−k)×n), G·Hᵀ = 0.
struct LinearCode {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    BitMatrix generator;
    BitMatrix parity_check;

    /// c = m·G for a k-bit message.
    BitVec encode(const BitVec& message) const;
};

using WarningSink = std::function<void(std::string_view)>;

/// Writes "warning: <msg>" to stderr.
void warn_to_stderr(std::string_view message);

/// Builds a code from a full-row-rank generator. H is the RREF of the null
/// space of G.
LinearCode code_from_generator(std::string name, const BitMatrix& generator);

/// Uses both matrices as given after checking full rank, complementary
/// dimensions and G·Hᵀ = 0.
LinearCode code_from_matrices(std::string name, const BitMatrix& generator, const BitMatrix& parity_check);

/// Builds a code from a parity-check matrix. Dependent rows are dropped
/// (reported through `warn`), the surviving rows keep their original order,
/// and G is the null space of H.
LinearCode code_from_parity_check(std::string name, const BitMatrix& parity_check,
                                  const WarningSink& warn = warn_to_stderr);

/// Primitive polynomial used for GF(2^m), bit i = coefficient of x^i. It is
/// the numerically smallest primitive polynomial of degree m, so for
/// m = 3..8: 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D.
std::uint32_t primitive_polynomial(int m);

/// Generator polynomial of the narrow-sense primitive BCH code of length
/// 2^m − 1 with designed distance 2t + 1 (bit i = coefficient of x^i).
std::vector<std::uint8_t> bch_generator_polynomial(int m, int t);

/// Extended primitive BCH code of length 2^m; the overall parity bit is the
/// last position. Requires 3 <= m <= 8 and a positive dimension.
LinearCode build_ebch(int m, int t);

/// Info set of a polar/PAC code, 1-based positions.
struct RateProfile {
    std::size_t n = 0;
    std::vector<std::size_t> info_set;

    std::size_t k() const { return info_set.size(); }
};

/// Text format: first line n, second line the 1-based info positions
/// separated by whitespace. '#' starts a comment line.
RateProfile parse_rate_profile(std::string_view text);
std::string format_rate_profile(const RateProfile& profile);

/// Reed-Muller style (64, 44) profile: all positions whose polar row weight
/// is >= 8 plus the two highest-index positions of row weight 4.
RateProfile pac64_default_profile();

/// Precoding polynomial [1 0 1 1 0 1 1].
BitVec pac_default_polynomial();

/// PAC code: unit messages on the info set, convolved with `poly` (upper
/// triangular Toeplitz T), then multiplied by the polar transform
/// F^{⊗log2 n}. H has one row per frozen position j, in increasing j: the
/// check F·(column j of T⁻¹). For poly = [1] this is column j of F, whose
/// support {x : x ⊇ j} nests along the frozen positions.
LinearCode build_pac(const RateProfile& profile, const BitVec& poly);

/// Parity-check text format: header "n k", then n−k lines of n '0'/'1'
/// characters, column 1 first. If rank(H) < n−k the dependent rows are
/// dropped with a warning and k grows accordingly.
LinearCode load_parity_check(std::string_view text, const WarningSink& warn = warn_to_stderr,
                             std::string name = "file");
std::string save_parity_check(const LinearCode& code);

/// Resolves a code id: ebch128, ebch8, pac64 or file:PATH.
LinearCode resolve_code(std::string_view id, const WarningSink& warn = warn_to_stderr);

}  // namespace cgrand

#endif  // CGRAND_CODES_HPP
