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

#ifndef SYMCOMM_INNER_FUNCTION_H
#define SYMCOMM_INNER_FUNCTION_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symcomm/exact_protocol.h"

namespace symcomm {

/// Two-party inner function G: {0,1}^j x {0,1}^k -> {0,1} together with a zero-error protocol for it.
class InnerFunction {
   public:
    /// `table[a * 2^k + b] = G(a, b)`. Builds the trivial exact protocol and checks it on every input.
    static InnerFunction from_truth_table(unsigned j, unsigned k, std::vector<std::uint8_t> table, std::string name = "");
    /// Uses a caller-supplied protocol; throws InputError unless it reproduces the table on every input.
    static InnerFunction with_protocol(unsigned j, unsigned k, std::vector<std::uint8_t> table, ExactProtocol protocol, std::string name);

    static InnerFunction and2();
    static InnerFunction xor2();

    unsigned alice_width() const {
        return j_;
    }
    unsigned bob_width() const {
        return k_;
    }
    bool operator()(std::uint32_t a, std::uint32_t b) const {
        return (*table_)[(static_cast<std::size_t>(a) << k_) | b] != 0;
    }
    const std::vector<std::uint8_t> &truth_table() const {
        return *table_;
    }
    const ExactProtocol &exact() const {
        return exact_;
    }
    /// Qubit cost of one compute-direction coherent evaluation.
    unsigned qcc_e() const {
        return qcc_e_;
    }
    /// The classical transcript of one evaluation with consecutive same-speaker rounds merged,
    /// including the output bit when Bob does not learn it. Merging leaves the ledger unchanged.
    const std::vector<ExactRound> &classical_runs() const {
        return classical_runs_;
    }
    /// Total classical bits of one evaluation, output bit included.
    unsigned classical_bits() const {
        return classical_bits_;
    }
    const std::string &name() const {
        return name_;
    }
    InnerFunction negated() const;

   private:
    InnerFunction(unsigned j, unsigned k, std::shared_ptr<const std::vector<std::uint8_t>> table, ExactProtocol protocol, std::string name);
    void check_protocol() const;

    unsigned j_;
    unsigned k_;
    std::shared_ptr<const std::vector<std::uint8_t>> table_;
    ExactProtocol exact_;
    std::string name_;
    unsigned qcc_e_ = 0;
    std::vector<ExactRound> classical_runs_;
    unsigned classical_bits_ = 0;
};

}  // namespace symcomm

#endif
