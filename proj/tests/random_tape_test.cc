// Copyright 2026 The symcomm Authors
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

#include "symcomm/random_tape.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace symcomm;

TEST(RandomTape, chunking_does_not_change_the_stream) {
    RandomTape a = RandomTape::shared(42);
    RandomTape b = RandomTape::shared(42);
    std::uint64_t wa = a.draw_word(64);
    std::uint64_t lo = b.draw_word(13);
    std::uint64_t hi = b.draw_word(51);
    ASSERT_EQ(wa, lo | (hi << 13));
    ASSERT_EQ(a.bits_drawn(), 64u);
    ASSERT_EQ(b.bits_drawn(), 64u);
}

TEST(RandomTape, uniform_bound_one_draws_nothing) {
    RandomTape t = RandomTape::shared(1);
    ASSERT_EQ(t.uniform(1), 0u);
    ASSERT_EQ(t.bits_drawn(), 0u);
}

TEST(RandomTape, uniform_is_roughly_uniform) {
    RandomTape t = RandomTape::shared(7);
    std::vector<int> counts(6, 0);
    for (int i = 0; i < 60000; i++) {
        counts[t.uniform(6)]++;
    }
    for (int c : counts) {
        ASSERT_NEAR(c, 10000, 400);
    }
}

TEST(RandomTape, split_children_differ_and_do_not_consume) {
    RandomTape t = RandomTape::shared(3);
    RandomTape c1 = t.split(TapeKind::alice_private);
    RandomTape c2 = t.split(TapeKind::alice_private);
    ASSERT_EQ(t.bits_drawn(), 0u);
    ASSERT_NE(c1.draw_word(64), c2.draw_word(64));
    ASSERT_FALSE(c1.is_shared());
}

TEST(RandomTape, ceil_log2) {
    ASSERT_EQ(ceil_log2(0), 0u);
    ASSERT_EQ(ceil_log2(1), 0u);
    ASSERT_EQ(ceil_log2(2), 1u);
    ASSERT_EQ(ceil_log2(5), 3u);
    ASSERT_EQ(ceil_log2(16), 4u);
    ASSERT_EQ(ceil_log2(17), 5u);
}

TEST(RandomTape, uniform_real_range) {
    RandomTape t = RandomTape::shared(11);
    double sum = 0;
    for (int i = 0; i < 10000; i++) {
        double u = t.uniform_real();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    ASSERT_NEAR(sum / 10000, 0.5, 0.02);
}
