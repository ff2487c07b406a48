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

#ifndef SYMCOMM_ORACLE_H
#define SYMCOMM_ORACLE_H

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "symcomm/cost_ledger.h"
#include "symcomm/dist_state.h"
#include "symcomm/instance.h"

namespace symcomm {

/// Width of an index register over `count` positions: max(1, ceil(log2 count)).
unsigned index_width(std::size_t count);

/// O_G over a fixed position list, with every controlled-XOR table precomputed.
///
/// Building the tables touches each (index, received messages) combination once, so repeated
/// queries inside one search only pay for the state updates.
class OracleCircuit {
   public:
    OracleCircuit(const Instance &instance, std::span<const std::size_t> positions, unsigned index_width);

    /// See apply_oracle.
    void apply(DistState &state, RegisterId index, RegisterId target, Channel &channel) const;

   private:
    const Instance &instance_;
    unsigned w_;
    std::vector<std::uint64_t> copy_;
    /// Per round: masks indexed by (speaker's index copy, messages received so far).
    std::vector<std::vector<std::uint64_t>> rounds_;
    std::vector<std::uint64_t> output_;
};

/// Coherent O_G: |i, z> -> |i, z xor G(X_p, Y_p)> with p = positions[i], run as a real two-party protocol.
///
/// Alice ships a copy of the index to Bob, the exact protocol for G runs round by round as XORs
/// into fresh message registers, Alice writes the output into `target`, and everything is
/// uncomputed in reverse. Excluded coordinates and index values >= positions.size() leave z
/// unchanged. Meters 2w + 2 qccE(G) simulated qubits and claims 2 qccE(G).
void apply_oracle(DistState &state,
                  const Instance &instance,
                  std::span<const std::size_t> positions,
                  RegisterId index,
                  RegisterId target,
                  Channel &channel);

/// The claimed-cost part of one oracle query, for runs that do not simulate the state.
void claim_oracle_query(const Instance &instance, Channel &channel);

/// Classical evaluation of G at coordinate i: Alice announces i, the exact protocol runs, and if
/// Bob cannot read off the output Alice announces it. Costs total_cost + ceil(log2 n) bits.
bool classical_eval_g(const Instance &instance, std::size_t i, Channel &channel, std::string_view tag = phase::verify);

}  // namespace symcomm

#endif
