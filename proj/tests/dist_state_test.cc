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

#include "symcomm/dist_state.h"

#include <cmath>

#include "gtest/gtest.h"

#include "symcomm/errors.h"

using namespace symcomm;

namespace {

DenseMatrix hadamard() {
    double h = 1.0 / std::sqrt(2.0);
    return DenseMatrix{2, {h, h, h, -h}};
}

DenseMatrix pauli_x() {
    return DenseMatrix{2, {0.0, 1.0, 1.0, 0.0}};
}

}  // namespace

TEST(DistState, alloc_basis_state) {
    DistState s;
    auto r = s.alloc(Party::alice, 3, "000");
    ASSERT_EQ(s.width(r), 3u);
    ASSERT_EQ(s.owner(r), Party::alice);
    ASSERT_NEAR(s.norm(), 1.0, 1e-12);
    ASSERT_EQ(s.amplitudes().size(), 8u);
    ASSERT_EQ(s.amplitudes()[0], Amplitude(1.0));
}

TEST(DistState, alloc_one_then_measure) {
    DistState s;
    auto r = s.alloc(Party::bob, 1, "1");
    RandomTape t = RandomTape::shared(1);
    for (int i = 0; i < 10; i++) {
        ASSERT_EQ(s.measure(r, t), 1u);
    }
}

TEST(DistState, allocations_are_disjoint) {
    DistState s;
    auto a = s.alloc(Party::alice, 2);
    auto b = s.alloc(Party::bob, 3, 5);
    ASSERT_EQ(s.offset(a), 0u);
    ASSERT_EQ(s.offset(b), 2u);
    ASSERT_EQ(s.qubit_count(), 5u);
    RandomTape t = RandomTape::shared(2);
    ASSERT_EQ(s.measure(b, t), 5u);
    ASSERT_EQ(s.measure(a, t), 0u);
}

TEST(DistState, identity_and_bit_flip) {
    DistState s;
    auto r = s.alloc(Party::alice, 1);
    auto before = s.amplitudes();
    s.apply(Party::alice, UnitaryFamily{{}, {r}, {DenseMatrix::identity(2)}});
    ASSERT_EQ(s.amplitudes(), before);
    s.apply(Party::alice, UnitaryFamily{{}, {r}, {pauli_x()}});
    ASSERT_NEAR(std::abs(s.amplitudes()[1]), 1.0, 1e-12);
    s.apply(Party::alice, XorFamily{{}, {r}, {1}});
    ASSERT_NEAR(std::abs(s.amplitudes()[0]), 1.0, 1e-12);
}

TEST(DistState, locality_is_enforced) {
    DistState s;
    auto a = s.alloc(Party::alice, 1);
    auto b = s.alloc(Party::bob, 1);
    ASSERT_THROW(s.apply(Party::alice, XorFamily{{}, {b}, {1}}), LocalityError);
    ASSERT_THROW(s.apply(Party::bob, UnitaryFamily{{}, {a}, {pauli_x()}}), LocalityError);
    ASSERT_THROW(s.apply(Party::alice, XorFamily{{b}, {a}, {0, 1}}), LocalityError);
}

TEST(DistState, dimension_mismatch) {
    DistState s;
    auto a = s.alloc(Party::alice, 2);
    ASSERT_THROW(s.apply(Party::alice, UnitaryFamily{{}, {a}, {pauli_x()}}), InputError);
    ASSERT_THROW(s.apply(Party::alice, XorFamily{{}, {a}, {4}}), InputError);
    ASSERT_THROW(s.apply(Party::alice, XorFamily{{a}, {a}, {0, 0, 0, 0}}), InputError);
}

TEST(DistState, non_unitary_block_is_rejected) {
    DistState s;
    auto a = s.alloc(Party::alice, 1, std::uint64_t{1});
    ASSERT_THROW(s.apply(Party::alice, UnitaryFamily{{}, {a}, {DenseMatrix{2, {1.0, 1.0, 0.0, 1.0}}}}), InputError);
}

TEST(DistState, send_meters_and_relabels) {
    DistState s;
    auto a = s.alloc(Party::alice, 1);
    auto idx = s.alloc(Party::alice, 4);
    s.apply(Party::alice, UnitaryFamily{{}, {a}, {hadamard()}});
    auto before = s.amplitudes();
    Channel c;
    s.send(a, Party::bob, c, phase::test_send);
    ASSERT_EQ(c.ledger().qubits_sim, 1u);
    ASSERT_EQ(s.owner(a), Party::bob);
    ASSERT_EQ(s.amplitudes(), before);
    s.send(idx, Party::bob, c, phase::index_sync);
    s.send(idx, Party::alice, c, phase::index_sync);
    ASSERT_EQ(c.ledger().qubits_sim, 9u);
    ASSERT_EQ(c.ledger().rounds, 2u);
    ASSERT_EQ(totals_from_transcript(c.transcript()).qubits_sim, c.ledger().qubits_sim);
    ASSERT_THROW(s.send(a, Party::bob, c, phase::test_send), UsageError);
    ASSERT_EQ(c.ledger().epr_pairs, 0u);
}

TEST(DistState, born_rule) {
    int ones = 0;
    for (int seed = 0; seed < 10000; seed++) {
        DistState s;
        auto a = s.alloc(Party::alice, 1);
        s.apply(Party::alice, UnitaryFamily{{}, {a}, {hadamard()}});
        RandomTape t = RandomTape::shared(derive_seed(77, seed));
        ones += static_cast<int>(s.measure(a, t));
        ASSERT_NEAR(s.norm(), 1.0, 1e-9);
    }
    ASSERT_NEAR(ones / 10000.0, 0.5, 0.02);
}

TEST(DistState, measurement_collapses_entangled_partner) {
    DistState s;
    auto a = s.alloc(Party::alice, 1);
    auto b = s.alloc(Party::alice, 1);
    s.apply(Party::alice, UnitaryFamily{{}, {a}, {hadamard()}});
    s.apply(Party::alice, XorFamily{{a}, {b}, {0, 1}});
    RandomTape t = RandomTape::shared(5);
    auto va = s.measure(a, t);
    ASSERT_EQ(s.measure(b, t), va);
}

TEST(DistState, controlled_family_selects_block) {
    DistState s;
    auto c = s.alloc(Party::bob, 1, 1);
    auto t = s.alloc(Party::bob, 1);
    s.apply(Party::bob, UnitaryFamily{{c}, {t}, {DenseMatrix::identity(2), pauli_x()}});
    RandomTape tape = RandomTape::shared(3);
    ASSERT_EQ(s.measure(t, tape), 1u);
}

TEST(DistState, release_requires_zero) {
    DistState s;
    auto a = s.alloc(Party::alice, 2, 1);
    auto b = s.alloc(Party::alice, 1);
    auto c = s.alloc(Party::bob, 2, 3);
    ASSERT_THROW(s.release(a), UsageError);
    s.release(b);
    ASSERT_EQ(s.qubit_count(), 4u);
    ASSERT_EQ(s.offset(c), 2u);
    RandomTape t = RandomTape::shared(1);
    ASSERT_EQ(s.measure(a, t), 1u);
    ASSERT_EQ(s.measure(c, t), 3u);
    ASSERT_THROW(s.width(b), InputError);
}

TEST(DistState, capacity) {
    DistState s(4);
    s.alloc(Party::alice, 3);
    ASSERT_THROW(s.alloc(Party::alice, 2), CapacityError);
}
