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

#ifndef SYMCOMM_SEARCH_H
#define SYMCOMM_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcomm/cost_ledger.h"
#include "symcomm/instance.h"
#include "symcomm/random_tape.h"

namespace symcomm {

/// `sim` runs the statevector protocol; `ledger` samples the measurement outcome exactly from
/// the Grover angle and only meters claimed qubits and classical bits (no simulated qubits).
enum class CostMode : std::uint8_t { sim, ledger };

struct SearchOptions {
    CostMode mode = CostMode::ledger;
    /// Base rounds of FIND-EXACT.
    unsigned exact_rounds = 40;
    /// Uniform random checks at the end of FIND-MORE.
    unsigned random_checks = 12;
    /// Oracle budget of FIND-ONE is ceil(budget_factor * sqrt(N)).
    double budget_factor = 9.0;
    /// Classical verification of every Grover candidate. Only tests turn this off.
    bool verify_candidates = true;
    unsigned qubit_limit = 20;
};

struct FindResult {
    std::optional<std::size_t> index;

    static FindResult found(std::size_t i) {
        return FindResult{i};
    }
    static FindResult none() {
        return FindResult{};
    }
    bool is_found() const {
        return index.has_value();
    }
    bool operator==(const FindResult &) const = default;
};

struct SampleMap {
    std::size_t gamma = 0;
    /// One coordinate per block [j*gamma, min((j+1)*gamma, n)).
    std::vector<std::size_t> chosen;
};

/// Draws one coordinate per block from the shared tape, metered as shared randomness.
SampleMap draw_sample_map(std::size_t n, std::size_t gamma, RandomTape &shared, Channel &channel);

/// True iff i is not excluded and G(X_i, Y_i) = 1. Excluded coordinates are rejected for free.
bool verify_candidate(const Instance &instance, std::size_t i, Channel &channel);

/// Distributed Grover search with the exponential schedule over the given coordinates.
///
/// Alice's schedule and measurement randomness come from a private child of `shared`.
/// Never reports an unverified coordinate.
FindResult find_one_on(const Instance &instance,
                       std::span<const std::size_t> positions,
                       RandomTape &shared,
                       Channel &channel,
                       const SearchOptions &options = {});

FindResult find_one(const Instance &instance, RandomTape &shared, Channel &channel, const SearchOptions &options = {});

/// Repeated block sampling followed by FIND-ONE on the sampled coordinates.
FindResult find_exact(const Instance &instance, std::size_t gamma, RandomTape &shared, Channel &channel, const SearchOptions &options = {});

/// FIND-EXACT for gamma = 2^j k, j = 0..floor(log2(n/k)), then uniform random checks.
FindResult find_more(const Instance &instance, std::size_t k, RandomTape &shared, Channel &channel, const SearchOptions &options = {});

/// Exact probability that a sample map with block size gamma over n coordinates hits exactly
/// one of the `marked` coordinates.
boost::multiprecision::cpp_rational single_hit_probability(std::size_t n, std::size_t gamma, std::span<const std::size_t> marked);

}  // namespace symcomm

#endif
