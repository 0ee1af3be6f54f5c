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

#include "cgrand/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cgrand {

namespace {

void require_permutation(std::span<const std::size_t> pi1, std::size_t n) {
    if (pi1.size() != n) throw std::invalid_argument("pi1 length must equal n");
    std::vector<bool> seen(n + 1, false);
    for (std::size_t pos : pi1) {
        if (pos < 1 || pos > n || seen[pos]) throw std::invalid_argument("pi1 is not a permutation of [1, n]");
        seen[pos] = true;
    }
}

bool in_interval(const ConstraintLayout& layout, std::size_t j, std::size_t rank, std::span<const std::size_t> pi1) {
    const std::size_t img = layout.image(pi1[rank - 1]);
    return layout.intervals[j].first <= img && img <= layout.intervals[j].second;
}

}  // namespace

RankMembership::RankMembership(std::size_t n) : masks_(n + 1, 0) {}

RankMembership::RankMembership(const ConstraintLayout& layout, std::span<const std::size_t> pi1)
    : masks_(layout.n + 1, 0) {
    require_permutation(pi1, layout.n);
    for (std::size_t rank = 1; rank <= layout.n; ++rank) {
        const int j = layout.constraint_of(pi1[rank - 1]);
        if (j >= 0) masks_[rank] = std::uint64_t{1} << j;
    }
}

std::uint64_t RankMembership::parity(std::span<const std::size_t> parts) const {
    std::uint64_t acc = 0;
    for (std::size_t part : parts) acc ^= masks_[part];
    return acc;
}

std::uint64_t progressive_update(const PatternNode& node, std::span<const std::size_t> new_parts,
                                 const ConstraintLayout& layout, std::span<const std::size_t> pi1) {
    if (new_parts.empty() || new_parts.size() > 2) throw std::invalid_argument("progressive_update takes one or two parts");
    const std::span<const std::size_t> base = node.base();
    for (std::size_t k = 0; k < new_parts.size(); ++k) {
        const std::size_t part = new_parts[k];
        if (part < 1 || part > layout.n) throw std::invalid_argument("progressive_update: part out of range");
        if (std::find(base.begin(), base.end(), part) != base.end() || (k == 1 && new_parts[0] == part)) {
            throw std::invalid_argument("progressive_update: duplicate part");
        }
    }
    std::uint64_t parities = node.partial_parities;
    for (std::size_t j = 0; j < layout.p(); ++j) {
        std::size_t hits = 0;
        for (std::size_t part : new_parts) hits += in_interval(layout, j, part, pi1) ? 1 : 0;
        // both in or both out: unchanged; exactly one in: flipped
        if (hits == 1) parities ^= std::uint64_t{1} << j;
    }
    return parities;
}

bool check_node(std::span<const std::size_t> parts, const ConstraintLayout& layout, const ConstraintTargets& targets,
                std::span<const std::size_t> pi1) {
    if (targets.p != layout.p()) throw std::invalid_argument("check_node: target count mismatch");
    std::vector<std::size_t> order(layout.p());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return layout.sets[a].size() < layout.sets[b].size();
    });
    for (std::size_t j : order) {
        bool parity = false;
        for (std::size_t part : parts) {
            if (in_interval(layout, j, part, pi1)) parity = !parity;
        }
        if (parity != targets[j]) return false;
    }
    return true;
}

bool check_node(const PatternNode& node, const ConstraintLayout& layout, const ConstraintTargets& targets,
                std::span<const std::size_t> pi1) {
    return check_node(std::span<const std::size_t>(node.parts), layout, targets, pi1);
}

PatternGenerator::PatternGenerator(std::size_t n) : n_(n), membership_(n) {
    if (n == 0) throw std::invalid_argument("PatternGenerator: n must be positive");
}

PatternGenerator::PatternGenerator(std::size_t n, const ConstraintLayout& layout, const ConstraintTargets& targets,
                                   std::span<const std::size_t> pi1)
    : n_(n), constrained_(layout.p() > 0), membership_(layout, pi1), target_(targets.bits) {
    if (n == 0) throw std::invalid_argument("PatternGenerator: n must be positive");
    if (layout.n != n) throw std::invalid_argument("PatternGenerator: layout length mismatch");
    if (targets.p != layout.p()) throw std::invalid_argument("PatternGenerator: target count mismatch");
}

void PatternGenerator::seek_weight(std::size_t weight) {
    weight_ = weight;
    weight_started_ = false;
    exhausted_ = false;
    frames_.clear();
    path_.clear();
}

void PatternGenerator::begin_weight() {
    frames_.clear();
    path_.clear();
    weight_started_ = true;
    if (weight_ > 0) frames_.push_back({weight_, 1, 0});
}

// Moves to the next materialized node (largest part <= n) in walk order.
bool PatternGenerator::advance_node() {
    while (true) {
        if (!weight_started_) {
            if (weight_ > max_weight()) {
                exhausted_ = true;
                return false;
            }
            begin_weight();
            if (weight_ == 0) {
                largest_ = 0;
                parity_ = 0;
                partial_ = 0;
                excluded_ = 0;
                return true;
            }
            if (weight_ <= n_) {
                largest_ = weight_;
                partial_ = 0;
                parity_ = membership_.mask(weight_);
                excluded_ = 1;
                return true;
            }
        }

        if (frames_.empty()) {
            ++weight_;
            weight_started_ = false;
            continue;
        }

        Frame& top = frames_.back();
        if (2 * top.next_split < top.remainder) {
            const std::size_t d = top.next_split++;
            const std::size_t child = top.remainder - d;
            if (d >= n_ || child > sum_above(d)) {
                // infeasible here stays infeasible for every larger d
                top.next_split = top.remainder;
                continue;
            }
            const std::uint64_t pair_base = top.prefix_parity;
            const std::uint64_t child_prefix = pair_base ^ membership_.mask(d);
            path_.push_back(d);
            frames_.push_back({child, d + 1, child_prefix});
            if (child <= n_) {
                largest_ = child;
                partial_ = pair_base;
                parity_ = child_prefix ^ membership_.mask(child);
                excluded_ = 2;
                return true;
            }
            continue;
        }

        frames_.pop_back();
        if (!frames_.empty()) path_.pop_back();
    }
}

bool PatternGenerator::advance() {
    if (exhausted_) return false;
    if (generated_ >= limit_) {
        limit_reached_ = true;
        return false;
    }
    if (!advance_node()) return false;
    ++generated_;
    parts_stale_ = true;
    return true;
}

bool PatternGenerator::next() {
    while (advance()) {
        if (parity_ != target_) continue;
        ++emitted_;
        return true;
    }
    return false;
}

std::span<const std::size_t> PatternGenerator::parts() const {
    if (parts_stale_) {
        parts_.clear();
        if (largest_ > 0) parts_.push_back(largest_);
        for (auto it = path_.rbegin(); it != path_.rend(); ++it) parts_.push_back(*it);
        parts_stale_ = false;
    }
    return parts_;
}

PatternNode PatternGenerator::node() const {
    const std::span<const std::size_t> p = parts();
    return PatternNode{{p.begin(), p.end()}, weight_, partial_, excluded_};
}

}  // namespace cgrand
