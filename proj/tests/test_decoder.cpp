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


#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cgrand/channel_sim.hpp"
#include "cgrand/decoder.hpp"
#include "cgrand/patterns.hpp"
#include "oracles.hpp"

namespace cgrand {
namespace {

std::vector<double> modulate(const BitVec& c) {
    std::vector<double> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c.test(i) ? -1.0 : 1.0;
    return r;
}

bool in_kernel(const LinearCode& code, const BitVec& c) { return gf2_matvec(code.parity_check, c).none(); }

// Logistic weight of e under the frame's ranking: sum of the ranks of its
// support.
std::size_t logistic_weight(const ReceivedFrame& frame, const BitVec& e) {
    std::vector<std::size_t> rank_of(frame.pi1.size() + 1);
    for (std::size_t r = 0; r < frame.pi1.size(); ++r) rank_of[frame.pi1[r]] = r + 1;
    std::size_t w = 0;
    for (std::size_t i : e.support()) w += rank_of[i + 1];
    return w;
}

TEST(PrepareFrame, HardDecisionAndOrder) {
    const ReceivedFrame f = prepare_frame(std::vector<double>{1.0, -1.0, 0.2, -0.7});
    EXPECT_EQ(f.hard, BitVec::from_string("0101"));
    EXPECT_EQ(f.pi1, (std::vector<std::size_t>{3, 4, 1, 2}));
}

TEST(PrepareFrame, TiesKeepIndexOrder) {
    const ReceivedFrame f = prepare_frame(std::vector<double>{-0.5, 0.5, 0.5, -0.1});
    EXPECT_EQ(f.pi1, (std::vector<std::size_t>{4, 1, 2, 3}));
}

TEST(PrepareFrame, ScrambledOrdering) {
    const std::vector<std::size_t> pi1{8, 1, 5, 6, 3, 7, 2, 4};
    std::vector<double> r(8);
    for (std::size_t rank = 1; rank <= 8; ++rank) r[pi1[rank - 1] - 1] = (rank % 2 ? 0.1 : -0.1) * rank;
    EXPECT_EQ(prepare_frame(r).pi1, pi1);
}

TEST(PrepareFrame, RejectsNonFinite) {
    EXPECT_THROW(prepare_frame(std::vector<double>{1.0, std::nan("")}), std::invalid_argument);
    EXPECT_THROW(prepare_frame(std::vector<double>{std::numeric_limits<double>::infinity()}), std::invalid_argument);
}

TEST(Decode, NoiselessFrameFirstQuery) {
    const LinearCode code = build_ebch(7, 3);
    std::mt19937_64 rng(71);
    BitVec msg(code.k);
    for (std::size_t i = 0; i < code.k; ++i) msg.set(i, (rng() & 1U) != 0);
    const BitVec c = code.encode(msg);
    const DecodeOutcome out = decode(code, prepare_frame(modulate(c)), DecodeBudget::matched(100));
    ASSERT_FALSE(out.abandoned());
    EXPECT_EQ(*out.codeword, c);
    EXPECT_EQ(out.queries_checked, 1u);
    EXPECT_EQ(out.found_at_weight, 0u);
}

TEST(Decode, LeastReliableBitFlipped) {
    const LinearCode code = build_ebch(3, 1);
    const BitVec c = code.encode(BitVec::from_string("1011"));
    std::vector<double> r = modulate(c);
    r[5] = -0.1 * r[5];  // flipped and least reliable
    const ReceivedFrame f = prepare_frame(r);
    EXPECT_EQ(f.pi1[0], 6u);
    const DecodeOutcome out = decode(code, f, DecodeBudget::matched(100));
    ASSERT_FALSE(out.abandoned());
    EXPECT_EQ(*out.codeword, c);
    EXPECT_EQ(out.queries_checked, 2u);
}

TEST(Decode, BudgetOfOneAbandons) {
    const LinearCode code = build_ebch(3, 1);
    std::vector<double> r = modulate(BitVec(8));
    r[2] = -0.3;
    const DecodeOutcome out = decode(code, prepare_frame(r), DecodeBudget::matched(1));
    EXPECT_TRUE(out.abandoned());
    EXPECT_EQ(out.queries_checked, 1u);
    EXPECT_EQ(out.candidates_generated, 1u);
}

TEST(Decode, UnconstrainedUsesSmallerBudget) {
    const LinearCode code = build_ebch(7, 3);
    const SimFrame frame = make_frame(code, 0.9, 5, 0, 0);
    const DecodeOutcome out = decode(code, frame.received, DecodeBudget{50, 7});
    if (out.abandoned()) {
        EXPECT_EQ(out.queries_checked, 7u);
    }
    EXPECT_LE(out.queries_checked, 7u);
    EXPECT_LE(out.candidates_generated, 7u);
}

TEST(Decode, SyndromeWordsMatchMatvec) {
    const LinearCode code = build_ebch(7, 3);
    const GrandDecoder dec(code);
    std::mt19937_64 rng(73);
    for (int t = 0; t < 50; ++t) {
        BitVec x(128);
        for (std::size_t i = 0; i < 128; ++i) x.set(i, (rng() & 1U) != 0);
        const std::vector<std::uint64_t> w = dec.syndrome_words(x);
        const BitVec s = gf2_matvec(code.parity_check, x);
        for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ((w[j / 64] >> (j % 64)) & 1U, s.test(j) ? 1u : 0u);
    }
}

struct Case {
    const char* code;
    double sigma;
    std::size_t p;
};

class Equivalence : public ::testing::TestWithParam<Case> {};

TEST_P(Equivalence, ConstrainedMatchesUnconstrainedFrameByFrame) {
    const Case param = GetParam();
    const LinearCode code = resolve_code(param.code);
    const ConstraintLayout layout = derive_constraints(code.parity_check, param.p);
    const GrandDecoder dec(code);
    const std::uint64_t b = 3000;
    for (std::uint64_t f = 0; f < 300; ++f) {
        const SimFrame frame = make_frame(code, param.sigma, 77, 0, f);
        const ConstraintTargets t = compute_targets(layout, frame.received.hard);
        const DecodeOutcome plain = dec.decode(frame.received, DecodeBudget::matched(b));
        const DecodeOutcome constrained = dec.decode(frame.received, DecodeBudget::matched(b), layout, t);
        ASSERT_EQ(plain.codeword, constrained.codeword) << "frame " << f;
        ASSERT_LE(constrained.queries_checked, plain.queries_checked);
        if (!plain.abandoned()) {
            EXPECT_TRUE(in_kernel(code, *plain.codeword));
            EXPECT_EQ(constrained.candidates_generated, plain.queries_checked);
            EXPECT_EQ(plain.found_at_weight, constrained.found_at_weight);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Codes, Equivalence,
                         ::testing::Values(Case{"ebch8", 0.8, 2}, Case{"ebch128", 0.55, 1}, Case{"ebch128", 0.55, 2},
                                           Case{"pac64", 0.6, 3}));

TEST(Decode, TrueErrorPassesConstraints) {
    const LinearCode code = build_ebch(7, 3);
    const ConstraintLayout layout = derive_constraints(code.parity_check, 2);
    for (std::uint64_t f = 0; f < 500; ++f) {
        const SimFrame frame = make_frame(code, 0.6, 79, 0, f);
        const ConstraintTargets t = compute_targets(layout, frame.received.hard);
        const BitVec e = frame.received.hard ^ frame.codeword;
        std::vector<std::size_t> rank_of(129);
        for (std::size_t r = 0; r < 128; ++r) rank_of[frame.received.pi1[r]] = r + 1;
        std::vector<std::size_t> parts;
        for (std::size_t i : e.support()) parts.push_back(rank_of[i + 1]);
        std::sort(parts.rbegin(), parts.rend());
        EXPECT_TRUE(check_node(parts, layout, t, frame.received.pi1));
    }
}

TEST(Decode, MinimumLogisticWeightWins) {
    const LinearCode code = load_parity_check(
        "12 6\n110100100001\n011010010010\n001101001100\n100110110000\n010011000111\n101001101010\n",
        [](std::string_view) {});
    const oracle::Rows codewords = [&] {
        const auto s = oracle::span(oracle::rows_of(code.generator), code.n);
        return oracle::Rows(s.begin(), s.end());
    }();
    std::size_t checked = 0;
    for (std::uint64_t f = 0; f < 400; ++f) {
        const SimFrame frame = make_frame(code, 0.8, 83, 0, f);
        const std::size_t true_w = logistic_weight(frame.received, frame.received.hard ^ frame.codeword);
        bool unique = true;
        for (const oracle::Bits& cw : codewords) {
            BitVec c(code.n);
            for (std::size_t i = 0; i < code.n; ++i) c.set(i, cw[i] != 0);
            if (c == frame.codeword) continue;
            if (logistic_weight(frame.received, frame.received.hard ^ c) <= true_w) unique = false;
        }
        if (!unique) continue;
        ++checked;
        const DecodeOutcome out = decode(code, frame.received, DecodeBudget::matched(1 << 12));
        ASSERT_FALSE(out.abandoned());
        EXPECT_EQ(*out.codeword, frame.codeword);
        EXPECT_EQ(out.found_at_weight, true_w);
    }
    EXPECT_GT(checked, 100u);
}

}  // namespace
}  // namespace cgrand
