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

#include "cgrand/bitlin.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace cgrand {

namespace {

std::size_t word_count(std::size_t length) { return (length + BitVec::kWordBits - 1) / BitVec::kWordBits; }

}  // namespace

BitVec::BitVec(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVec BitVec::from_bits(std::initializer_list<int> bits) {
    BitVec v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
        v.set(i++, b == 1);
    }
    return v;
}

BitVec BitVec::ones(std::size_t length) {
    BitVec v(length);
    for (std::size_t i = 0; i < length; ++i) v.set(i);
    return v;
}

BitVec BitVec::unit(std::size_t length, std::size_t index) {
    if (index >= length) throw std::out_of_range("unit vector index out of range");
    BitVec v(length);
    v.set(index);
    return v;
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (word_type word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVec::none() const {
    for (word_type word : words_) {
        if (word != 0) return false;
    }
    return true;
}

bool BitVec::all() const { return weight() == length_; }

std::vector<std::size_t> BitVec::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        word_type word = words_[w];
        while (word != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

void BitVec::require_same_length(const BitVec& other) const {
    if (length_ != other.length_) throw std::invalid_argument("BitVec length mismatch");
}

bool BitVec::dot(const BitVec& other) const {
    require_same_length(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

bool BitVec::is_subset_of(const BitVec& other) const {
    require_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

bool BitVec::intersects(const BitVec& other) const {
    require_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    require_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    require_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
    require_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

std::string BitVec::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (test(i)) s[i] = '1';
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const BitVec& r : rows_) {
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix row length does not match column count");
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVec> parsed;
    parsed.reserve(rows.size());
    for (std::string_view r : rows) parsed.push_back(BitVec::from_string(r));
    const std::size_t cols = parsed.empty() ? 0 : parsed.front().size();
    return BitMatrix(cols, std::move(parsed));
}

void BitMatrix::append_row(BitVec row) {
    if (row.size() != cols_) throw std::invalid_argument("BitMatrix row length does not match column count");
    rows_.push_back(std::move(row));
}

BitVec BitMatrix::column(std::size_t c) const {
    BitVec out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].test(c));
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c : rows_[r].support()) t.set(c, r);
    }
    return t;
}

BitVec gf2_matvec(const BitMatrix& m, const BitVec& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("gf2_matvec: dimension mismatch");
    BitVec s(m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) s.set(j, m.row(j).dot(v));
    return s;
}

BitVec gf2_vecmat(const BitVec& c, const BitMatrix& m) {
    if (c.size() != m.rows()) throw std::invalid_argument("gf2_vecmat: dimension mismatch");
    BitVec out(m.cols());
    for (std::size_t r : c.support()) out ^= m.row(r);
    return out;
}

BitMatrix gf2_mul_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("gf2_mul_transpose: dimension mismatch");
    BitMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) out.set(i, j, a.row(i).dot(b.row(j)));
    }
    return out;
}

RowReduction gf2_row_reduce(const BitMatrix& m) {
    RowReduction out{m, 0, {}};
    BitMatrix& a = out.reduced;
    std::size_t next = 0;
    for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
        std::size_t pivot = next;
        while (pivot < a.rows() && !a.test(pivot, c)) ++pivot;
        if (pivot == a.rows()) continue;
        std::swap(a.row(pivot), a.row(next));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r != next && a.test(r, c)) a.row(r) ^= a.row(next);
        }
        out.pivots.push_back(c);
        ++next;
    }
    out.rank = next;
    return out;
}

std::size_t gf2_rank(const BitMatrix& m) { return gf2_row_reduce(m).rank; }

BitMatrix gf2_nullspace(const BitMatrix& m) {
    const RowReduction rr = gf2_row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    BitMatrix basis(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVec x(n);
        x.set(f);
        for (std::size_t r = 0; r < rr.rank; ++r) {
            if (rr.reduced.test(r, f)) x.set(rr.pivots[r]);
        }
        basis.append_row(std::move(x));
    }
    return basis;
}

std::optional<BitVec> gf2_in_row_space(const BitMatrix& m, const BitVec& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("gf2_in_row_space: dimension mismatch");

    // Echelon form with a coefficient vector tracked alongside each row.
    struct Tracked {
        BitVec row;
        BitVec coeff;
        std::size_t pivot;
    };
    std::vector<Tracked> basis;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec row = m.row(r);
        BitVec coeff = BitVec::unit(m.rows(), r);
        for (const Tracked& b : basis) {
            if (row.test(b.pivot)) {
                row ^= b.row;
                coeff ^= b.coeff;
            }
        }
        if (row.none()) continue;
        const std::size_t pivot = row.support().front();
        basis.push_back({std::move(row), std::move(coeff), pivot});
    }

    BitVec rest = v;
    BitVec coeff(m.rows());
    for (const Tracked& b : basis) {
        if (rest.test(b.pivot)) {
            rest ^= b.row;
            coeff ^= b.coeff;
        }
    }
    if (!rest.none()) return std::nullopt;
    return coeff;
}

std::vector<std::size_t> gf2_independent_rows(const BitMatrix& m) {
    std::vector<std::pair<BitVec, std::size_t>> basis;
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec row = m.row(r);
        for (const auto& [b, pivot] : basis) {
            if (row.test(pivot)) row ^= b;
        }
        if (row.none()) continue;
        const std::size_t pivot = row.support().front();
        basis.emplace_back(std::move(row), pivot);
        kept.push_back(r);
    }
    return kept;
}

}  // namespace cgrand
