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

#ifndef SYMCOMM_COMPOSED_H
#define SYMCOMM_COMPOSED_H

#include <cstddef>
#include <cstdint>
#include <optional>

#include "symcomm/bit_string.h"
#include "symcomm/cost_ledger.h"
#include "symcomm/instance.h"
#include "symcomm/random_tape.h"
#include "symcomm/search.h"
#include "symcomm/symmetric_spec.h"

namespace symcomm {

struct CountResult {
    enum class Kind : std::uint8_t { exact, at_least };
    Kind kind = Kind::exact;
    std::size_t value = 0;

    static CountResult exact(std::size_t c) {
        return {Kind::exact, c};
    }
    static CountResult at_least(std::size_t c) {
        return {Kind::at_least, c};
    }
    bool is_exact() const {
        return kind == Kind::exact;
    }
    bool operator==(const CountResult &) const = default;
};

/// ones counts coordinates with G = 1; zeros counts G = 0 (runs on not-G).
enum class Polarity : std::uint8_t { ones, zeros };

/// Counts marked coordinates up to `cap` by find-and-exclude.
///
/// Keeps a promise k (initially cap, never above cap minus the number found): FIND-MORE(k) either
/// yields a verified coordinate, which is excluded, or k is halved. At k = 0 FIND-ONE is
/// repeated ceil(log2(cap + 1)) times; only if every repetition comes back empty is the count
/// reported exact. Every counted coordinate is verified, so Exact never overcounts.
CountResult count_up_to(const Instance &instance,
                        std::size_t cap,
                        Polarity polarity,
                        RandomTape &shared,
                        Channel &channel,
                        const SearchOptions &options = {});

/// f o G by counting ones up to lo + 1 and zeros up to l1 + 1 around the constant region [lo, n - l1].
bool compute_composed(const SymmetricSpec &f, const Instance &instance, RandomTape &shared, Channel &channel, const SearchOptions &options = {});

struct SplitD {
    SymmetricSpec d0;
    SymmetricSpec d1;
    /// D was negated so that its middle value is 0; invert the final answer.
    bool negated = false;
};

/// D0 keeps D below and on the lower end of the constant region, D1 keeps D above it; both are
/// 0 elsewhere, so D = D0 or D1 after normalization. Throws DegenerateSplitError on constant D.
SplitD split_d(const SymmetricSpec &f);

/// |x and y| when both |not x| and |not y| are at most l1, else nullopt (weight below n - l1).
///
/// Bob announces whether |not y| <= l1, Alice likewise, then they intersect the sparse
/// complements and swap their complement weights. Also nullopt if the intersection aborts.
std::optional<std::size_t> compute_f1_path(const BitString &x, const BitString &y, std::size_t l1, RandomTape &tape, Channel &channel);

enum class RandomnessModel : std::uint8_t { shared, private_only };

/// f o AND2 for symmetric f through the D0/D1 split.
///
/// In private_only mode the f1 path does not touch the shared tape: Alice draws
/// newman_budget(n, l1) + 16 private bits, sends them, and both sides seed the f1 tape from them.
bool compute_sym_and(const SymmetricSpec &f,
                     const BitString &x,
                     const BitString &y,
                     RandomnessModel model,
                     RandomTape &shared,
                     Channel &channel,
                     const SearchOptions &options = {});

/// Width of Alice's seed message in private_only mode.
unsigned private_seed_bits(std::size_t n, std::size_t l1);

}  // namespace symcomm

#endif
