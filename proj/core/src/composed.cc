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

#include "symcomm/composed.h"

#include <algorithm>

#include "symcomm/analysis.h"
#include "symcomm/errors.h"
#include "symcomm/sparse.h"

using namespace symcomm;

CountResult symcomm::count_up_to(const Instance &instance,
                                 std::size_t cap,
                                 Polarity polarity,
                                 RandomTape &shared,
                                 Channel &channel,
                                 const SearchOptions &options) {
    if (cap > instance.size()) {
        throw InputError("count cap exceeds n");
    }
    if (cap == 0) {
        return CountResult::at_least(0);
    }
    Instance work = polarity == Polarity::zeros ? instance.with_negated_g() : instance;
    std::size_t found = 0;
    std::size_t promise = cap;
    unsigned confirmations = std::max(1u, ceil_log2(cap + 1));
    while (found < cap) {
        promise = std::min(promise, cap - found);
        if (promise > 0) {
            FindResult r = find_more(work, promise, shared, channel, options);
            if (r.is_found()) {
                work.exclude(*r.index);
                found++;
            } else {
                promise /= 2;
            }
            continue;
        }
        bool hit = false;
        for (unsigned rep = 0; rep < confirmations && !hit; rep++) {
            FindResult r = find_one(work, shared, channel, options);
            if (r.is_found()) {
                work.exclude(*r.index);
                found++;
                hit = true;
            }
        }
        if (!hit) {
            return CountResult::exact(found);
        }
    }
    return CountResult::at_least(cap);
}

bool symcomm::compute_composed(const SymmetricSpec &f, const Instance &instance, RandomTape &shared, Channel &channel, const SearchOptions &options) {
    if (f.n() != instance.size()) {
        throw InputError("arity of f does not match the instance size");
    }
    if (f.is_constant()) {
        return f.value(0);
    }
    std::size_t n = f.n();
    auto [lo, hi] = f.constant_region();
    std::size_t l1 = n - hi;
    if (lo > 0) {
        CountResult ones = count_up_to(instance, std::min(lo + 1, n), Polarity::ones, shared, channel, options);
        if (ones.is_exact() && ones.value <= lo) {
            return f.value(ones.value);
        }
    }
    if (l1 > 0) {
        CountResult zeros = count_up_to(instance, std::min(l1 + 1, n), Polarity::zeros, shared, channel, options);
        if (zeros.is_exact() && zeros.value <= l1) {
            return f.value(n - zeros.value);
        }
    }
    return f.value(lo);
}

SplitD symcomm::split_d(const SymmetricSpec &f) {
    if (f.is_constant()) {
        throw DegenerateSplitError("cannot split a constant function");
    }
    auto [lo, hi] = f.constant_region();
    bool negated = f.value(lo);
    SymmetricSpec g = negated ? f.negated() : f;
    std::vector<std::uint8_t> d0(g.n() + 1, 0);
    std::vector<std::uint8_t> d1(g.n() + 1, 0);
    for (std::size_t m = 0; m <= g.n(); m++) {
        if (m <= lo) {
            d0[m] = g.table()[m];
        }
        if (m > hi) {
            d1[m] = g.table()[m];
        }
    }
    return SplitD{SymmetricSpec::from_table(std::move(d0)), SymmetricSpec::from_table(std::move(d1)), negated};
}

std::optional<std::size_t> symcomm::compute_f1_path(const BitString &x, const BitString &y, std::size_t l1, RandomTape &tape, Channel &channel) {
    if (x.size() != y.size()) {
        throw InputError("inputs differ in length");
    }
    BitString nx = x.negated();
    BitString ny = y.negated();
    bool bob_ok = ny.weight() <= l1;
    channel.send_bits(Party::bob, 1, phase::weight_check);
    if (!bob_ok) {
        return std::nullopt;
    }
    bool alice_ok = nx.weight() <= l1;
    channel.send_bits(Party::alice, 1, phase::weight_check);
    if (!alice_ok) {
        return std::nullopt;
    }
    SparseResult z = sparse_intersect(nx, ny, l1, tape, channel);
    if (z.aborted) {
        return std::nullopt;
    }
    unsigned wbits = ceil_log2(l1 + 1);
    channel.send_bits(Party::alice, wbits, phase::weight_exchange);
    channel.send_bits(Party::bob, wbits, phase::weight_exchange);
    return x.size() + z.alice.size() - nx.weight() - ny.weight();
}

unsigned symcomm::private_seed_bits(std::size_t n, std::size_t l1) {
    return newman_budget(n, l1) + 16;
}

bool symcomm::compute_sym_and(const SymmetricSpec &f,
                              const BitString &x,
                              const BitString &y,
                              RandomnessModel model,
                              RandomTape &shared,
                              Channel &channel,
                              const SearchOptions &options) {
    if (x.size() != f.n() || y.size() != f.n()) {
        throw InputError("input length does not match the arity of f");
    }
    if (f.is_constant()) {
        return f.value(0);
    }
    SplitD split = split_d(f);
    std::size_t n = f.n();
    bool b0 = false;
    if (!split.d0.is_constant()) {
        b0 = compute_composed(split.d0, Instance::and2(x, y), shared, channel, options);
    }
    bool b1 = false;
    if (!split.d1.is_constant()) {
        std::size_t l1 = n - f.constant_region().second;
        std::optional<std::size_t> weight;
        if (model == RandomnessModel::shared) {
            weight = compute_f1_path(x, y, l1, shared, channel);
        } else {
            RandomTape alice = shared.split(TapeKind::alice_private);
            unsigned bits = private_seed_bits(n, l1);
            std::uint64_t seed = alice.draw_word(bits);
            channel.send_bits(Party::alice, bits, phase::newman_seed);
            // Public after the send, but not drawn from the shared tape.
            RandomTape f1_tape(derive_seed(seed, bits), TapeKind::alice_private);
            weight = compute_f1_path(x, y, l1, f1_tape, channel);
        }
        b1 = weight.has_value() && split.d1.value(*weight);
    }
    bool result = b0 || b1;
    return split.negated ? !result : result;
}
