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

#include "symcomm/analysis.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "symcomm/descriptors.h"

using namespace symcomm;

namespace {

SymmetricSpec table(std::vector<std::uint8_t> d) {
    return SymmetricSpec::from_table(std::move(d));
}

// D(m) = 1 iff m >= threshold.
SymmetricSpec upper(std::size_t n, std::size_t threshold) {
    std::vector<std::uint8_t> d(n + 1, 0);
    for (std::size_t m = threshold; m <= n; m++) {
        d[m] = 1;
    }
    return table(d);
}

}  // namespace

TEST(Analysis, l0_l1_scan) {
    ASSERT_EQ(compute_l0_l1(std::vector<std::uint8_t>{0, 1, 1, 1, 1}), (std::pair<std::size_t, std::size_t>{1, 0}));
    ASSERT_EQ(compute_l0_l1(std::vector<std::uint8_t>{0, 1, 0, 1, 0}), (std::pair<std::size_t, std::size_t>{2, 2}));
    ASSERT_EQ(compute_l0_l1(std::vector<std::uint8_t>{1, 1, 1, 1, 1}), (std::pair<std::size_t, std::size_t>{0, 0}));
    ASSERT_EQ(compute_l0_l1(std::vector<std::uint8_t>{0, 0, 0, 0, 1}), (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Analysis, odd_n_middle_change_is_invisible_to_l0_l1) {
    auto maj3 = table({0, 0, 1, 1});
    ASSERT_EQ(maj3.l0(), 0u);
    ASSERT_EQ(maj3.l1(), 0u);
    ASSERT_FALSE(maj3.is_constant());
    ASSERT_EQ(maj3.constant_region(), (std::pair<std::size_t, std::size_t>{2, 3}));
}

TEST(Analysis, query_bound) {
    ASSERT_DOUBLE_EQ(query_bound(parse_outer("or", 16)), 4.0);
    ASSERT_DOUBLE_EQ(query_bound(parse_outer("parity", 16)), 16.0);
    ASSERT_DOUBLE_EQ(query_bound(table(std::vector<std::uint8_t>(17, 1))), 0.0);
}

TEST(Analysis, razborov_bound) {
    ASSERT_DOUBLE_EQ(razborov_bound(parse_outer("or", 16)), 4.0);
    ASSERT_NEAR(razborov_bound(parse_outer("parity", 16)), std::sqrt(128.0) + 8, 1e-12);
    ASSERT_NEAR(razborov_bound(parse_outer("parity", 16)), 19.31, 0.01);
    ASSERT_DOUBLE_EQ(razborov_bound(table(std::vector<std::uint8_t>(17, 0))), 0.0);
}

TEST(Analysis, query_bound_squared_is_exact) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 40;
        std::vector<std::uint8_t> d(n + 1);
        for (auto &v : d) {
            v = rng() & 1;
        }
        auto f = table(d);
        double q = query_bound(f);
        ASSERT_NEAR(q * q, static_cast<double>(n * (f.l0() + f.l1())), 1e-9);
    }
}

TEST(Analysis, adding_a_lower_change_point_never_decreases_l0) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 500; trial++) {
        std::size_t n = 2 + rng() % 30;
        std::vector<std::uint8_t> d(n + 1);
        for (auto &v : d) {
            v = rng() % 4 == 0;
        }
        std::size_t l = 1 + rng() % (n / 2);
        if (d[l] != d[l - 1]) {
            continue;
        }
        auto before = compute_l0_l1(d).first;
        // Flipping the suffix from l adds exactly the change at l.
        for (std::size_t m = l; m <= n; m++) {
            d[m] ^= 1;
        }
        ASSERT_GE(compute_l0_l1(d).first, before);
        ASSERT_GE(compute_l0_l1(d).first, l);
    }
}

TEST(Analysis, fooling_set_sizes) {
    ASSERT_EQ(*fooling_set_bound(4, 1).size, 1);
    ASSERT_EQ(*fooling_set_bound(4, 2).size, 4);
    ASSERT_EQ(*fooling_set_bound(12, 2).size, 12);
    ASSERT_EQ(*fooling_set_bound(12, 0).size, 0);
    ASSERT_DOUBLE_EQ(fooling_set_bound(12, 0).log_size, 0.0);
    ASSERT_NEAR(fooling_set_bound(12, 3).log_size, std::log2(66.0), 1e-12);
    ASSERT_EQ(enumerate_fooling_set(4, 2).size(), 4u);
    for (const auto &x : enumerate_fooling_set(4, 2)) {
        ASSERT_EQ(x.negated().weight(), 1u);
    }
}

TEST(Analysis, fooling_set_large_n_uses_lgamma) {
    auto b = fooling_set_bound(100, 4);
    ASSERT_FALSE(b.size.has_value());
    double exact = std::log2(161700.0);
    ASSERT_NEAR(b.log_size, exact, exact * 1e-9);
    auto small = fooling_set_bound(64, 33);
    ASSERT_EQ(*small.size, boost::multiprecision::cpp_int("1832624140942590534"));
}

TEST(Analysis, fooling_property_n12) {
    for (std::size_t l1 : {2u, 3u}) {
        auto f = upper(12, 12 - l1 + 1);
        ASSERT_EQ(f.l1(), l1);
        auto set = enumerate_fooling_set(12, l1);
        ASSERT_EQ(set.size(), fooling_set_bound(12, l1).size->convert_to<std::size_t>());
        ASSERT_TRUE(check_fooling_property(f, set));
    }
}

TEST(Analysis, fooling_property_detects_a_bad_function) {
    // Weight n - 2 is a cross pair and thr:4 accepts it.
    auto f = parse_outer("thr:4", 6);
    ASSERT_FALSE(check_fooling_property(f, enumerate_fooling_set(6, 2)));
}

TEST(Analysis, classification) {
    auto and8 = classify_and_private_lower(parse_outer("and", 8));
    ASSERT_EQ(and8.classification, Classification::and_like);
    ASSERT_EQ(and8.regime, LowerRegime::theta_one);
    auto nand8 = classify_and_private_lower(parse_outer("and", 8).negated());
    ASSERT_EQ(nand8.classification, Classification::negand_like);
    auto c = classify_and_private_lower(table(std::vector<std::uint8_t>(9, 1)));
    ASSERT_EQ(c.classification, Classification::constant);
    ASSERT_EQ(c.value, 0.0);

    auto g = classify_and_private_lower(upper(8, 7));
    ASSERT_EQ(g.classification, Classification::general);
    ASSERT_EQ(g.regime, LowerRegime::l0_zero);
    ASSERT_NEAR(g.value, 2 + std::log2(3.0), 1e-12);
    ASSERT_NEAR(g.value, 3.58, 0.01);

    auto p = classify_and_private_lower(parse_outer("parity", 8));
    ASSERT_EQ(p.regime, LowerRegime::l0_positive);
    ASSERT_NEAR(p.value, std::sqrt(32.0) + 4 + std::log2(3.0), 1e-12);
    ASSERT_NEAR(p.value, 11.24, 0.01);
}

TEST(Analysis, classification_of_odd_majority_is_general) {
    ASSERT_EQ(classify_and_private_lower(table({0, 0, 1, 1})).classification, Classification::general);
    ASSERT_EQ(classify_and_private_lower(table({0, 1})).classification, Classification::and_like);
}

TEST(Analysis, newman_budget) {
    // ceil(log2 5) + ceil(log2 log2 257) = 3 + 4.
    ASSERT_EQ(newman_budget(256, 4), 7u);
    ASSERT_EQ(newman_budget(255, 4), 6u);
    ASSERT_EQ(newman_budget(2, 0), 1u);
    ASSERT_EQ(newman_budget(1u << 20, 0), 5u);
    ASSERT_EQ(newman_budget(0, 0), 0u);
}

TEST(Analysis, report) {
    auto r = analyze(parse_outer("or", 16));
    ASSERT_EQ(r.n, 16u);
    ASSERT_EQ(r.l0, 1u);
    ASSERT_EQ(r.l1, 0u);
    ASSERT_DOUBLE_EQ(r.razborov, 4.0);
    ASSERT_DOUBLE_EQ(r.fooling_log, 0.0);
    ASSERT_EQ(analyze(parse_outer("table:00001", 4)).classification, Classification::and_like);
    ASSERT_DOUBLE_EQ(analyze(parse_outer("parity", 8)).query_bound, 8.0);
}
