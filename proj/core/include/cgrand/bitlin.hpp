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

#ifndef CGRAND_BITLIN_HPP
#define CGRAND_BITLIN_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cgrand {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Element access is 0-based like std::bitset. Domain-level positions
/// (pattern parts, permutations, constraint sets, file formats) are 1-based
/// and converted at the module boundary that owns them.
class BitVec {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t length);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
    /// any other character.
    static BitVec from_string(std::string_view bits);
    static BitVec from_bits(std::initializer_list<int> bits);
    static BitVec ones(std::size_t length);
    /// 0-based unit vector.
    static BitVec unit(std::size_t length, std::size_t index);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true) {
        const word_type mask = word_type{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

    std::size_t weight() const;
    bool none() const;
    bool all() const;

    /// 0-based indices of the 1-bits, ascending.
    std::vector<std::size_t> support() const;

    /// Parity of the bitwise AND, i.e. the GF(2) inner product.
    bool dot(const BitVec& other) const;
    /// True when supp(*this) is contained in supp(other).
    bool is_subset_of(const BitVec& other) const;
    bool intersects(const BitVec& other) const;

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    BitVec& operator|=(const BitVec& other);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }
    friend BitVec operator&(BitVec lhs, const BitVec& rhs) { return lhs &= rhs; }
    friend BitVec operator|(BitVec lhs, const BitVec& rhs) { return lhs |= rhs; }

    bool operator==(const BitVec& other) const = default;

    std::span<const word_type> words() const { return words_; }
    std::string to_string() const;

   private:
    void require_same_length(const BitVec& other) const;

    std::size_t length_ = 0;
    std::vector<word_type> words_;
};

/// Dense GF(2) matrix stored as a list of row vectors. A matrix may have zero
/// rows while still carrying a column count (the parity-check matrix of a
/// rate-1 code).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    /// Every row must have length `cols`.
    BitMatrix(std::size_t cols, std::vector<BitVec> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }
    std::span<const BitVec> row_list() const { return rows_; }

    bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    void append_row(BitVec row);
    BitVec column(std::size_t c) const;
    BitMatrix transpose() const;

    bool operator==(const BitMatrix& other) const = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// s = M·v with s_j = XOR_i M[j,i]·v_i.
BitVec gf2_matvec(const BitMatrix& m, const BitVec& v);

/// Row vector times matrix: x = c·M, the XOR of the rows selected by c.
BitVec gf2_vecmat(const BitVec& c, const BitMatrix& m);

/// A·Bᵀ; entry (i, j) is the inner product of row i of A and row j of B.
BitMatrix gf2_mul_transpose(const BitMatrix& a, const BitMatrix& b);

struct RowReduction {
    BitMatrix reduced;                 // RREF, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;   // 0-based pivot column of each nonzero row
};

RowReduction gf2_row_reduce(const BitMatrix& m);
std::size_t gf2_rank(const BitMatrix& m);

/// Basis of {x : M·x = 0}, one basis vector per free column, in column order.
BitMatrix gf2_nullspace(const BitMatrix& m);

/// Coefficient vector c (length M.rows) with c·M = v, or nullopt when v is
/// outside the row space.
std::optional<BitVec> gf2_in_row_space(const BitMatrix& m, const BitVec& v);

/// Original-order subset of rows forming a basis of the row space (greedy:
/// a row is kept when it is independent of the rows kept before it).
std::vector<std::size_t> gf2_independent_rows(const BitMatrix& m);

}  // namespace cgrand

#endif  // CGRAND_BITLIN_HPP
