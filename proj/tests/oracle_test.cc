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

#include "symcomm/oracle.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "symcomm/errors.h"

using namespace symcomm;

namespace {

std::shared_ptr<const InnerFunction> random_g(unsigned j, unsigned k, std::mt19937_64 &rng) {
    std::vector<std::uint8_t> t(std::size_t{1} << (j + k));
    for (auto &v : t) {
        v = rng() & 1;
    }
    return std::make_shared<const InnerFunction>(InnerFunction::from_truth_table(j, k, t));
}

Instance random_instance(std::shared_ptr<const InnerFunction> g, std::size_t n, std::mt19937_64 &rng) {
    std::vector<std::uint32_t> x(n), y(n);
    for (std::size_t i = 0; i < n; i++) {
        x[i] = static_cast<std::uint32_t>(rng() % (1u << g->alice_width()));
        y[i] = static_cast<std::uint32_t>(rng() % (1u << g->bob_width()));
    }
    return Instance(std::move(g), x, y);
}

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; i++) {
        v[i] = i;
    }
    return v;
}

// Checks |i, z> -> |i, z ^ marked(i)> on every basis state.
void check_basis_action(const Instance &inst) {
    auto pos = iota(inst.size());
    unsigned w = index_width(inst.size());
    for (std::size_t i = 0; i < inst.size(); i++) {
        for (unsigned z = 0; z < 2; z++) {
            DistState s;
            auto idx = s.alloc(Party::alice, w, i);
            auto tgt = s.alloc(Party::alice, 1, z);
            Channel c;
            apply_oracle(s, inst, pos, idx, tgt, c);
            ASSERT_EQ(s.qubit_count(), w + 1);
            std::size_t expect = i | (static_cast<std::size_t>(z ^ inst.marked(i)) << w);
            ASSERT_NEAR(std::abs(s.amplitudes()[expect]), 1.0, 1e-12) << "i=" << i << " z=" << z;
        }
    }
}

}  // namespace

TEST(Oracle, and2_example) {
    // X = 1010, Y = 1100: only coordinate 0 has G = 1.
    auto inst = Instance::and2(BitString::parse("1010"), BitString::parse("1100"));
    auto pos = iota(4);
    DistState s;
    auto idx = s.alloc(Party::alice, 2, 0);
    auto tgt = s.alloc(Party::alice, 1, 0);
    Channel c;
    apply_oracle(s, inst, pos, idx, tgt, c);
    ASSERT_NEAR(std::abs(s.amplitudes()[0b100]), 1.0, 1e-12);

    DistState s1;
    auto idx1 = s1.alloc(Party::alice, 2, 1);
    auto tgt1 = s1.alloc(Party::alice, 1, 0);
    apply_oracle(s1, inst, pos, idx1, tgt1, c);
    ASSERT_NEAR(std::abs(s1.amplitudes()[0b001]), 1.0, 1e-12);
}

TEST(Oracle, all_one_bit_tables_exhaustive) {
    std::mt19937_64 rng(11);
    for (unsigned bits = 0; bits < 16; bits++) {
        std::vector<std::uint8_t> t{static_cast<std::uint8_t>(bits & 1), static_cast<std::uint8_t>((bits >> 1) & 1),
                                    static_cast<std::uint8_t>((bits >> 2) & 1), static_cast<std::uint8_t>((bits >> 3) & 1)};
        auto g = std::make_shared<const InnerFunction>(InnerFunction::from_truth_table(1, 1, t));
        for (std::size_t n : {1u, 3u, 4u, 8u}) {
            check_basis_action(random_instance(g, n, rng));
        }
    }
}

TEST(Oracle, random_two_bit_tables) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; trial++) {
        auto g = random_g(1 + rng() % 2, 1 + rng() % 2, rng);
        check_basis_action(random_instance(g, 1 + rng() % 8, rng));
    }
}

TEST(Oracle, excluded_coordinates_are_unmarked) {
    auto inst = Instance::and2(BitString::parse("1111"), BitString::parse("1111"));
    inst.exclude(2);
    check_basis_action(inst);
}

TEST(Oracle, involution_and_clean_ancillas) {
    std::mt19937_64 rng(13);
    auto g = random_g(2, 1, rng);
    auto inst = random_instance(g, 6, rng);
    auto pos = iota(6);
    DistState s;
    auto idx = s.alloc(Party::alice, 3);
    auto tgt = s.alloc(Party::alice, 1);
    // Arbitrary superposition over index and target.
    DenseMatrix u{8, std::vector<Amplitude>(64)};
    for (std::size_t r = 0; r < 8; r++) {
        for (std::size_t c = 0; c < 8; c++) {
            u.entries[r * 8 + c] = std::polar(1.0 / std::sqrt(8.0), 2.0 * M_PI * static_cast<double>(r * c) / 8.0);
        }
    }
    s.apply(Party::alice, UnitaryFamily{{}, {idx}, {u}});
    double h = 1.0 / std::sqrt(2.0);
    s.apply(Party::alice, UnitaryFamily{{}, {tgt}, {DenseMatrix{2, {h, h, h, -h}}}});
    auto before = s.amplitudes();
    Channel c;
    apply_oracle(s, inst, pos, idx, tgt, c);
    ASSERT_EQ(s.qubit_count(), 4u);
    apply_oracle(s, inst, pos, idx, tgt, c);
    for (std::size_t i = 0; i < before.size(); i++) {
        ASSERT_NEAR(std::abs(s.amplitudes()[i] - before[i]), 0.0, 1e-7);
    }
}

TEST(Oracle, metering) {
    auto inst = Instance::and2(BitString::parse("10101010"), BitString::parse("11001100"));
    auto pos = iota(8);
    DistState s;
    auto idx = s.alloc(Party::alice, 3);
    auto tgt = s.alloc(Party::alice, 1);
    Channel c;
    apply_oracle(s, inst, pos, idx, tgt, c);
    // Index copy there and back plus Bob's one-bit message there and back.
    ASSERT_EQ(c.ledger().qubits_sim, 2u * 3 + 2u * 1);
    ASSERT_EQ(c.ledger().qubits_claimed, 2u);
    ASSERT_EQ(totals_from_transcript(c.transcript()), c.ledger());
    ASSERT_EQ(c.ledger().epr_pairs, 0u);

    std::mt19937_64 rng(4);
    auto g = random_g(3, 2, rng);
    auto inst2 = random_instance(g, 4, rng);
    DistState s2(20);
    auto idx2 = s2.alloc(Party::alice, 2);
    auto tgt2 = s2.alloc(Party::alice, 1);
    Channel c2;
    apply_oracle(s2, inst2, iota(4), idx2, tgt2, c2);
    ASSERT_EQ(c2.ledger().qubits_sim, 2u * 2 + 2u * (3 + 1));
    ASSERT_EQ(c2.ledger().qubits_claimed, 2u * 4);
}

TEST(Oracle, register_preconditions) {
    auto inst = Instance::and2(BitString::parse("1010"), BitString::parse("1100"));
    auto pos = iota(4);
    DistState s;
    auto idx = s.alloc(Party::bob, 2);
    auto tgt = s.alloc(Party::alice, 1);
    Channel c;
    ASSERT_THROW(apply_oracle(s, inst, pos, idx, tgt, c), LocalityError);
    DistState s2;
    auto small = s2.alloc(Party::alice, 1);
    auto tgt2 = s2.alloc(Party::alice, 1);
    ASSERT_THROW(apply_oracle(s2, inst, pos, small, tgt2, c), InputError);
}

TEST(Oracle, classical_eval) {
    auto and_inst = Instance::and2(BitString::parse("1000000000000000"), BitString::parse("1000000000000000"));
    Channel c;
    ASSERT_TRUE(classical_eval_g(and_inst, 0, c));
    ASSERT_EQ(c.ledger().classical_bits, 6u);
    auto xg = std::make_shared<const InnerFunction>(InnerFunction::xor2());
    auto xor_inst = Instance::single_bit(xg, BitString::parse("1"), BitString::parse("1"));
    Channel c2;
    ASSERT_FALSE(classical_eval_g(xor_inst, 0, c2));
    ASSERT_THROW(classical_eval_g(xor_inst, 1, c2), InputError);
}

TEST(Oracle, classical_eval_ledger_without_transcript) {
    std::mt19937_64 rng(11);
    std::vector<std::shared_ptr<const InnerFunction>> gs = {std::make_shared<const InnerFunction>(InnerFunction::and2()),
                                                            std::make_shared<const InnerFunction>(InnerFunction::xor2()),
                                                            random_g(2, 3, rng)};
    for (const auto &g : gs) {
        auto inst = random_instance(g, 12, rng);
        Channel kept, bare(false);
        for (std::size_t i = 0; i < inst.size(); i++) {
            kept.send_bits(Party::bob, 1, phase::test_send);
            bare.send_bits(Party::bob, 1, phase::test_send);
            ASSERT_EQ(classical_eval_g(inst, i, kept), classical_eval_g(inst, i, bare));
            ASSERT_EQ(kept.ledger(), bare.ledger());
        }
        ASSERT_EQ(totals_from_transcript(kept.transcript()), kept.ledger());
    }
}
