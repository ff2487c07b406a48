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

#ifndef SYMCOMM_EXACT_PROTOCOL_H
#define SYMCOMM_EXACT_PROTOCOL_H

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "symcomm/party.h"

namespace symcomm {

/// One message of a deterministic two-party protocol.
///
/// The message is a function of the speaker's own input and of the messages the speaker has
/// received so far (in order). Messages a party sent itself are recomputable from its input, so
/// they are not passed in. Because every message is a classical function of data the speaker
/// holds, the round can be executed coherently as an XOR into a fresh register and later undone
/// by applying the same XOR again.
struct ExactRound {
    Party speaker;
    unsigned width;
    std::function<std::uint32_t(std::uint32_t input, std::span<const std::uint32_t> received)> message;
};

/// Trace of a classical replay.
struct ExactReplay {
    bool output;
    std::vector<std::uint32_t> messages;
};

/// Zero-error protocol for an inner function G, ending with the output at Alice.
struct ExactProtocol {
    std::string name;
    std::vector<ExactRound> rounds;
    /// Alice's final local computation from her input and the messages she received.
    std::function<bool(std::uint32_t alice_input, std::span<const std::uint32_t> received)> output;
    /// Whether Bob can also derive the output from what he saw; if not, a classical run
    /// ends with Alice announcing it (one extra bit).
    bool output_known_to_bob = false;

    /// Qubits in the compute direction of a coherent run: the sum of the round widths. This is qccE(G).
    unsigned compute_cost() const;
    /// Bits of a classical run after which both parties know G(a, b).
    unsigned total_cost() const;

    ExactReplay replay(std::uint32_t alice_input, std::uint32_t bob_input) const;
    /// Same rounds, output bit inverted.
    ExactProtocol negated() const;
};

/// Inputs received by `party` before round `round_index`, given all messages so far.
std::vector<std::uint32_t> received_before(const ExactProtocol &protocol,
                                           std::size_t round_index,
                                           Party party,
                                           std::span<const std::uint32_t> messages);

/// "Alice sends her j bits, Bob replies with G(a, b)"; for the AND and XOR tables on one bit each,
/// the one-message variant in which Bob sends b and Alice finishes locally.
///
/// `table` holds G(a, b) at index a * 2^k + b.
ExactProtocol trivial_exact_protocol(unsigned j, unsigned k, std::shared_ptr<const std::vector<std::uint8_t>> table);

}  // namespace symcomm

#endif
