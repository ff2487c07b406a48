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

#include "symcomm/search.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "symcomm/errors.h"

using namespace symcomm;
using boost::multiprecision::cpp_rational;

namespace {

Instance marked_and2(std::size_t n, std::vector<std::size_t> marked) {
    return Instance::and2(BitString::from_support(n, marked), BitString(n, true));
}

double success_rate(const Instance &inst, CostMode mode, int trials, std::uint64_t base, auto run) {
    SearchOptions o;
    o.mode = mode;
    int ok = 0;
    for (int s = 0; s < trials; s++) {
        RandomTape t = RandomTape::shared(derive_seed(base, s));
        Channel c(false);
        FindResult r = run(inst, t, c, o);
        ok += r.is_found() && inst.marked(*r.index);
    }
    return ok / static_cast<double>(trials);
}

}  // namespace

TEST(FindOne, single_marked_sim) {
    auto inst = marked_and2(4, {3});
    double rate = success_rate(inst, CostMode::sim, 10000, 1, [](auto &i, auto &t, auto &c, auto &o) { return find_one(i, t, c, o); });
    ASSERT_GE(rate, 0.99);
}

TEST(FindOne, single_marked_ledger) {
    auto inst = marked_and2(64, {17});
    double rate = success_rate(inst, CostMode::ledger, 10000, 2, [](auto &i, auto &t, auto &c, auto &o) { return find_one(i, t, c, o); });
    ASSERT_GE(rate, 0.99);
}

TEST(FindOne, no_marked_is_always_none) {
    auto inst = Instance::and2(BitString::parse("10101010"), BitString::parse("01010101"));
    for (auto mode : {CostMode::sim, CostMode::ledger}) {
        SearchOptions o;
        o.mode = mode;
        for (int s = 0; s < 1000; s++) {
            RandomTape t = RandomTape::shared(derive_seed(3, s));
            Channel c(false);
            ASSERT_FALSE(find_one(inst, t, c, o).is_found());
            ASSERT_EQ(c.ledger().epr_pairs, 0u);
        }
    }
}

TEST(FindOne, all_marked_is_verified) {
    auto inst = marked_and2(8, {0, 1, 2, 3, 4, 5, 6, 7});
    for (int s = 0; s < 200; s++) {
        RandomTape t = RandomTape::shared(derive_seed(4, s));
        Channel c;
        SearchOptions o;
        o.mode = CostMode::sim;
        auto r = find_one(inst, t, c, o);
        ASSERT_TRUE(r.is_found());
        ASSERT_TRUE(inst.value(*r.index));
        ASSERT_GT(c.ledger().classical_bits, 0u);
    }
}

TEST(FindOne, n_equal_one) {
    auto yes = marked_and2(1, {0});
    auto no = marked_and2(1, {});
    RandomTape t = RandomTape::shared(5);
    Channel c;
    SearchOptions o;
    o.mode = CostMode::sim;
    ASSERT_EQ(find_one(yes, t, c, o), FindResult::found(0));
    ASSERT_FALSE(find_one(no, t, c, o).is_found());
}

TEST(FindOne, ledger_mode_has_no_simulated_qubits) {
    auto inst = marked_and2(32, {});
    RandomTape t = RandomTape::shared(6);
    Channel c;
    find_one(inst, t, c);
    ASSERT_EQ(c.ledger().qubits_sim, 0u);
    // Full budget ceil(9 sqrt 32) = 51 units, each iteration claiming 2 qccE + 1.
    ASSERT_GT(c.ledger().qubits_claimed, 0u);
    ASSERT_LE(c.ledger().qubits_claimed, 51u * 3);
}

TEST(FindOne, sim_and_ledger_claims_match_per_seed) {
    // The schedule and claims depend only on the private tape, not on the engine.
    auto inst = marked_and2(8, {});
    for (int s = 0; s < 20; s++) {
        SearchOptions sim;
        sim.mode = CostMode::sim;
        RandomTape t1 = RandomTape::shared(derive_seed(7, s));
        RandomTape t2 = RandomTape::shared(derive_seed(7, s));
        Channel c1, c2;
        find_one(inst, t1, c1, sim);
        find_one(inst, t2, c2);
        ASSERT_EQ(c1.ledger().qubits_claimed, c2.ledger().qubits_claimed);
    }
}

TEST(FindOne, disabling_verification_breaks_one_sidedness) {
    auto inst = marked_and2(8, {});
    SearchOptions o;
    o.verify_candidates = false;
    RandomTape t = RandomTape::shared(8);
    Channel c;
    ASSERT_TRUE(find_one(inst, t, c, o).is_found());
}

TEST(SampleMap, one_coordinate_per_block) {
    RandomTape t = RandomTape::shared(9);
    Channel c;
    auto m = draw_sample_map(10, 4, t, c);
    ASSERT_EQ(m.chosen.size(), 3u);
    ASSERT_LT(m.chosen[0], 4u);
    ASSERT_GE(m.chosen[1], 4u);
    ASSERT_LT(m.chosen[1], 8u);
    ASSERT_GE(m.chosen[2], 8u);
    ASSERT_LT(m.chosen[2], 10u);
    ASSERT_EQ(c.ledger().shared_random_bits, t.bits_drawn());
    ASSERT_THROW(draw_sample_map(10, 11, t, c), InputError);
    ASSERT_THROW(draw_sample_map(10, 0, t, c), InputError);
}

TEST(SampleMap, per_element_probability_in_short_block) {
    RandomTape t = RandomTape::shared(10);
    Channel c(false);
    std::vector<int> hits(5, 0);
    for (int s = 0; s < 20000; s++) {
        auto m = draw_sample_map(5, 3, t, c);
        hits[m.chosen[0]]++;
        hits[m.chosen[1]]++;
    }
    for (int i = 0; i < 3; i++) {
        ASSERT_NEAR(hits[i] / 20000.0, 1.0 / 3, 0.015);
    }
    ASSERT_NEAR(hits[3] / 20000.0, 0.5, 0.015);
}

TEST(FindExact, single_hit_probability_examples) {
    std::vector<std::size_t> m{1, 5};
    ASSERT_EQ(single_hit_probability(8, 4, m), cpp_rational(3, 8));
    ASSERT_GE(cpp_rational(3, 8), cpp_rational(2, 9));
    cpp_rational ratio(1, 2);
    ASSERT_GE(ratio - ratio * ratio, cpp_rational(2, 9));
    std::vector<std::size_t> none;
    ASSERT_EQ(single_hit_probability(8, 4, none), 0);
}

TEST(FindExact, single_hit_probability_matches_enumeration) {
    // Brute force over all 4^2 sample maps for n = 8, gamma = 4.
    std::vector<std::size_t> m{1, 2, 6};
    int exactly_one = 0;
    for (int a = 0; a < 4; a++) {
        for (int b = 4; b < 8; b++) {
            int hit = (a == 1 || a == 2) + (b == 6);
            exactly_one += hit == 1;
        }
    }
    ASSERT_EQ(single_hit_probability(8, 4, m), cpp_rational(exactly_one, 16));
}

TEST(FindExact, promise_success) {
    auto inst = marked_and2(8, {1, 5});
    for (auto mode : {CostMode::sim, CostMode::ledger}) {
        double rate = success_rate(inst, mode, 3000, 11, [](auto &i, auto &t, auto &c, auto &o) { return find_exact(i, 4, t, c, o); });
        ASSERT_GE(rate, 0.99);
    }
}

TEST(FindExact, none_when_unmarked) {
    auto inst = marked_and2(8, {});
    for (std::size_t gamma = 1; gamma <= 8; gamma++) {
        RandomTape t = RandomTape::shared(gamma);
        Channel c;
        ASSERT_FALSE(find_exact(inst, gamma, t, c).is_found());
        // Blocks of size 1 need no coins.
        if (gamma > 1) {
            ASSERT_GT(c.ledger().shared_random_bits, 0u);
        }
    }
    RandomTape t = RandomTape::shared(1);
    Channel c;
    ASSERT_THROW(find_exact(inst, 0, t, c), InputError);
    ASSERT_THROW(find_exact(inst, 9, t, c), InputError);
}

TEST(FindMore, two_marked) {
    auto inst = marked_and2(8, {2, 7});
    double rate = success_rate(inst, CostMode::ledger, 10000, 12, [](auto &i, auto &t, auto &c, auto &o) { return find_more(i, 2, t, c, o); });
    ASSERT_GE(rate, 0.99);
}

TEST(FindMore, dense_marked_set_random_checks) {
    // 7 of 8 marked: the random checks alone miss with probability (1/8)^12.
    ASSERT_LT(std::pow(1.0 / 8, 12), 1e-10);
    auto inst = marked_and2(8, {0, 1, 2, 3, 4, 5, 6});
    double rate = success_rate(inst, CostMode::ledger, 2000, 13, [](auto &i, auto &t, auto &c, auto &o) { return find_more(i, 7, t, c, o); });
    ASSERT_EQ(rate, 1.0);
}

TEST(FindMore, geometric_sum) {
    double sum = 0;
    for (int j = 0; j <= 6; j++) {
        sum += std::sqrt(64.0 / std::pow(2.0, j));
    }
    ASSERT_NEAR(sum, 24.90, 0.01);
    ASSERT_LE(sum, 1.0 / (1.0 - std::pow(2.0, -0.5)) * 8.0);
}

TEST(FindMore, range_checks) {
    auto inst = marked_and2(8, {});
    RandomTape t = RandomTape::shared(1);
    Channel c;
    ASSERT_THROW(find_more(inst, 0, t, c), InputError);
    ASSERT_THROW(find_more(inst, 9, t, c), InputError);
}

TEST(Verify, candidates) {
    auto inst = marked_and2(4, {1, 2});
    inst.exclude(2);
    Channel c;
    ASSERT_TRUE(verify_candidate(inst, 1, c));
    ASSERT_FALSE(verify_candidate(inst, 0, c));
    auto before = c.ledger();
    ASSERT_FALSE(verify_candidate(inst, 2, c));
    ASSERT_EQ(c.ledger(), before);
    ASSERT_THROW(verify_candidate(inst, 4, c), InputError);
}

TEST(Search, soundness_on_random_instances) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t n = 1 + rng() % 16;
        BitString x(n), y(n);
        for (std::size_t i = 0; i < n; i++) {
            x.set(i, rng() % 4 == 0);
            y.set(i, rng() % 2 == 0);
        }
        auto inst = Instance::and2(x, y);
        RandomTape t = RandomTape::shared(rng());
        Channel c;
        std::size_t k = 1 + rng() % n;
        for (auto r : {find_one(inst, t, c), find_exact(inst, k, t, c), find_more(inst, k, t, c)}) {
            if (r.is_found()) {
                ASSERT_TRUE(inst.marked(*r.index));
            }
        }
        if (inst.marked_count() == 0) {
            ASSERT_FALSE(find_more(inst, k, t, c).is_found());
        }
    }
}
