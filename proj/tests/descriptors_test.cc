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

#include "symcomm/descriptors.h"

#include "gtest/gtest.h"

#include "symcomm/errors.h"

using namespace symcomm;

TEST(Descriptors, named_outer_functions) {
    ASSERT_EQ(parse_outer("or", 4).table(), (std::vector<std::uint8_t>{0, 1, 1, 1, 1}));
    ASSERT_EQ(parse_outer("and", 4).table(), (std::vector<std::uint8_t>{0, 0, 0, 0, 1}));
    ASSERT_EQ(parse_outer("parity", 4).table(), (std::vector<std::uint8_t>{0, 1, 0, 1, 0}));
    ASSERT_EQ(parse_outer("thr:2", 4).table(), (std::vector<std::uint8_t>{0, 0, 1, 1, 1}));
}

TEST(Descriptors, table_outer_function) {
    ASSERT_EQ(parse_outer("table:00001", std::nullopt).n(), 4u);
    ASSERT_EQ(parse_outer("table:00001", 4).n(), 4u);
    ASSERT_THROW(parse_outer("table:00001", 5), InputError);
    ASSERT_THROW(parse_outer("table:0021", std::nullopt), InputError);
    ASSERT_THROW(parse_outer("or", std::nullopt), InputError);
    ASSERT_THROW(parse_outer("xor", 4), InputError);
    ASSERT_THROW(parse_outer("thr:x", 4), InputError);
}

TEST(Descriptors, inner_truth_tables) {
    auto a = parse_inner("tt:1:1:8");
    ASSERT_EQ(a->truth_table(), InnerFunction::and2().truth_table());
    auto x = parse_inner("tt:1:1:6");
    ASSERT_EQ(x->truth_table(), InnerFunction::xor2().truth_table());
    ASSERT_EQ(parse_inner("and2")->qcc_e(), 1u);
    ASSERT_EQ(parse_inner("xor2")->name(), "xor2");
    auto big = parse_inner("tt:3:2:deadbeef");
    ASSERT_EQ(big->alice_width(), 3u);
    ASSERT_EQ(truth_table_hex(*big), "deadbeef");
    ASSERT_THROW(parse_inner("tt:1:1:18"), InputError);
    ASSERT_THROW(parse_inner("tt:1:1:g"), InputError);
    ASSERT_THROW(parse_inner("tt:0:1:1"), InputError);
    ASSERT_THROW(parse_inner("nand"), InputError);
}

TEST(Descriptors, single_row_table_bits) {
    // j = k = 1 with only G(1, 0) = 1: row 2 -> hex 4.
    auto g = parse_inner("tt:1:1:4");
    ASSERT_TRUE((*g)(1, 0));
    ASSERT_FALSE((*g)(0, 1));
}
