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

#include "cgrand/constraints.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace cgrand {

namespace {

std::size_t distance_to_half(std::size_t candidate, std::size_t whole) {
    const std::size_t twice = 2 * candidate;
    return twice > whole ? twice - whole : whole - twice;
}

// Single rows first, then XOR pairs (a < b), zero words skipped.
std::vector<BitVec> candidate_pool(const BitMatrix& h) {
    std::vector<BitVec> pool;
    for (const BitVec& row : h.row_list()) {
        if (!row.none()) pool.push_back(row);
    }
    for (std::size_t a = 0; a < h.rows(); ++a) {
        for (std::size_t b = a + 1; b < h.rows(); ++b) {
            BitVec combo = h.row(a) ^ h.row(b);
            if (!combo.none()) pool.push_back(std::move(combo));
        }
    }
    return pool;
}

const BitVec* best_split(const std::vector<BitVec>& pool, const BitVec& target) {
    const std::size_t target_weight = target.weight();
    const BitVec* best = nullptr;
    std::size_t best_score = 0;
    for (const BitVec& cand : pool) {
        if (!cand.is_subset_of(target)) continue;
        const std::size_t w = cand.weight();
        if (w == target_weight) continue;
        const std::size_t score = distance_to_half(w, target_weight);
        if (best == nullptr || score < best_score) {
            best = &cand;
            best_score = score;
        }
    }
    return best;
}

std::vector<BitVec> derive_rows(const BitMatrix& h, std::size_t p, bool& overall_parity) {
    std::vector<BitVec> held;
    overall_parity = false;
    if (p == 0 || h.rows() == 0) return held;

    const std::size_t n = h.cols();
    const BitVec all_one = BitVec::ones(n);
    if (gf2_in_row_space(h, all_one)) {
        held.push_back(all_one);
        overall_parity = true;
    } else {
        std::size_t best = h.rows();
        for (std::size_t r = 0; r < h.rows(); ++r) {
            if (h.row(r).none()) continue;
            if (best == h.rows() || h.row(r).weight() > h.row(best).weight()) best = r;
        }
        if (best == h.rows()) return held;
        held.push_back(h.row(best));
    }

    const std::vector<BitVec> pool = candidate_pool(h);
    while (held.size() < p) {
        std::vector<std::size_t> order(held.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return held[a].weight() > held[b].weight(); });

        bool split = false;
        for (std::size_t slot : order) {
            const BitVec* best = best_split(pool, held[slot]);
            if (best == nullptr) continue;
            BitVec partner = *best;
            held[slot] ^= partner;
            held.push_back(std::move(partner));
            split = true;
            break;
        }
        if (!split) break;
    }
    return held;
}

}  // namespace

int ConstraintLayout::constraint_of(std::size_t position) const {
    const std::size_t img = image(position);
    for (std::size_t j = 0; j < intervals.size(); ++j) {
        if (intervals[j].first <= img && img <= intervals[j].second) return static_cast<int>(j);
    }
    return -1;
}

InsufficientConstraints::InsufficientConstraints(std::size_t requested, std::size_t achievable)
    : std::runtime_error("requested " + std::to_string(requested) + " disjoint constraints but only " +
                         std::to_string(achievable) + " can be derived"),
      requested_(requested),
      achievable_(achievable) {}

ConstraintLayout make_layout(std::size_t n, std::vector<BitVec> rows) {
    if (n == 0) throw std::invalid_argument("make_layout: n must be positive");
    if (rows.size() > kMaxConstraints) throw std::invalid_argument("make_layout: too many constraints");
    ConstraintLayout layout;
    layout.n = n;

    BitVec covered(n);
    for (const BitVec& row : rows) {
        if (row.size() != n) throw std::invalid_argument("make_layout: row length mismatch");
        if (row.none()) throw std::invalid_argument("make_layout: empty constraint support");
        if (row.intersects(covered)) throw std::invalid_argument("make_layout: constraint supports are not disjoint");
        covered |= row;
    }

    layout.pi2.assign(n, 0);
    std::size_t next = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (!covered.test(i)) layout.pi2[i] = next++;
    }
    for (const BitVec& row : rows) {
        std::vector<std::size_t> set;
        const std::size_t lower = next;
        for (std::size_t i : row.support()) {
            set.push_back(i + 1);
            layout.pi2[i] = next++;
        }
        layout.intervals.emplace_back(lower, next - 1);
        layout.sets.push_back(std::move(set));
    }
    layout.has_overall_parity = !rows.empty() && rows.front().all();
    layout.rows = std::move(rows);
    return layout;
}

ConstraintLayout derive_constraints_upto(const BitMatrix& h, std::size_t p) {
    if (p > kMaxConstraints) throw std::invalid_argument("derive_constraints: p exceeds supported maximum");
    bool overall_parity = false;
    std::vector<BitVec> rows = derive_rows(h, p, overall_parity);
    ConstraintLayout layout = make_layout(h.cols(), std::move(rows));
    layout.has_overall_parity = overall_parity;
    return layout;
}

ConstraintLayout derive_constraints(const BitMatrix& h, std::size_t p) {
    ConstraintLayout layout = derive_constraints_upto(h, p);
    if (layout.p() < p) throw InsufficientConstraints(p, layout.p());
    return layout;
}

ConstraintTargets compute_targets(const ConstraintLayout& layout, const BitVec& v) {
    if (v.size() != layout.n) throw std::invalid_argument("compute_targets: length mismatch");
    ConstraintTargets t{layout.p(), 0};
    for (std::size_t j = 0; j < layout.p(); ++j) {
        if (layout.rows[j].dot(v)) t.bits |= std::uint64_t{1} << j;
    }
    return t;
}

std::uint64_t count_search_space(std::size_t n, const ConstraintLayout& layout, const ConstraintTargets& targets) {
    if (n == 0 || n > kMaxEnumerationLength) {
        throw std::invalid_argument("count_search_space: n must be in [1, " + std::to_string(kMaxEnumerationLength) +
                                    "]");
    }
    if (layout.p() > 0 && layout.n != n) throw std::invalid_argument("count_search_space: layout length mismatch");
    if (targets.p != layout.p()) throw std::invalid_argument("count_search_space: target count mismatch");

    std::vector<std::uint32_t> masks;
    for (const BitVec& row : layout.rows) masks.push_back(static_cast<std::uint32_t>(row.words()[0]));

    std::uint64_t count = 0;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t e = 0; e < end; ++e) {
        bool ok = true;
        for (std::size_t j = 0; j < masks.size() && ok; ++j) {
            ok = (static_cast<unsigned>(std::popcount(e & masks[j])) & 1U) == static_cast<unsigned>(targets[j]);
        }
        if (ok) ++count;
    }
    return count;
}

BitVec relative_syndrome(const BitMatrix& h, const BitVec& syndrome_zero, std::span<const std::size_t> support) {
    if (syndrome_zero.size() != h.rows()) throw std::invalid_argument("relative_syndrome: syndrome length mismatch");
    BitVec s = syndrome_zero;
    for (std::size_t pos : support) {
        if (pos < 1 || pos > h.cols()) throw std::out_of_range("relative_syndrome: position out of range");
        for (std::size_t j = 0; j < h.rows(); ++j) {
            if (h.test(j, pos - 1)) s.flip(j);
        }
    }
    return s;
}

}  // namespace cgrand
