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

#ifndef SYMCOMM_SPARSE_H
#define SYMCOMM_SPARSE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symcomm/bit_string.h"
#include "symcomm/cost_ledger.h"
#include "symcomm/random_tape.h"

namespace symcomm {

/// Parameters of the bucket-filtering intersection protocol and its abort wrapper.
struct SparseConfig {
    /// Caller's sparsity bound; inputs must have weight <= k.
    std::size_t k = 0;
    std::size_t k0 = 8;
    /// Effective bound max(k, k0).
    std::size_t k_eff = 8;
    /// Filtering passes per side; the protocol runs 2T alternating messages.
    unsigned passes = 0;
    /// Buckets per hash, 64 k'.
    std::size_t buckets = 0;
    /// Abort constant; the run aborts before a message would take it past 200 C k' bits.
    std::size_t c = 0;

    std::uint64_t threshold() const {
        return 200ull * c * k_eff;
    }
    /// Worst-case bits of a complete run.
    std::uint64_t worst_case_bits() const {
        return 2ull * passes * buckets;
    }
};

/// k' = max(k, k0), B = 64 k', T = ceil(log2(400 k') / 6), C = ceil(128 T / 200) + 1.
SparseConfig make_sparse_config(std::size_t k, std::size_t k0 = 8);

struct SparseResult {
    bool aborted = false;
    /// Each party's surviving candidates, ascending.
    std::vector<std::size_t> alice;
    std::vector<std::size_t> bob;

    /// Both parties agree (they then hold the same set).
    bool agreed() const {
        return !aborted && alice == bob;
    }
};

/// Public-coin sparse set intersection: computes {i : x_i = y_i = 1} for |x|, |y| <= k.
///
/// Each message is the occupancy bitmap of the sender's candidates under a fresh shared
/// multiply-shift hash into B buckets; the receiver drops candidates in empty buckets. True
/// intersection elements always survive. Throws InputError on a sparsity violation.
SparseResult sparse_intersect(const BitString &x, const BitString &y, const SparseConfig &config, RandomTape &tape, Channel &channel);

SparseResult sparse_intersect(const BitString &x, const BitString &y, std::size_t k, RandomTape &tape, Channel &channel);

}  // namespace symcomm

#endif
