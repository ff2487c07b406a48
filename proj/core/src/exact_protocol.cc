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

#include "symcomm/exact_protocol.h"

#include "symcomm/errors.h"

using namespace symcomm;

unsigned ExactProtocol::compute_cost() const {
    unsigned total = 0;
    for (const auto &r : rounds) {
        total += r.width;
    }
    return total;
}

unsigned ExactProtocol::total_cost() const {
    return compute_cost() + (output_known_to_bob ? 0 : 1);
}

std::vector<std::uint32_t> symcomm::received_before(const ExactProtocol &protocol,
                                                    std::size_t round_index,
                                                    Party party,
                                                    std::span<const std::uint32_t> messages) {
    std::vector<std::uint32_t> received;
    for (std::size_t q = 0; q < round_index; q++) {
        if (protocol.rounds[q].speaker != party) {
            received.push_back(messages[q]);
        }
    }
    return received;
}

ExactReplay ExactProtocol::replay(std::uint32_t alice_input, std::uint32_t bob_input) const {
    ExactReplay result{false, {}};
    for (std::size_t r = 0; r < rounds.size(); r++) {
        const auto &round = rounds[r];
        auto received = received_before(*this, r, round.speaker, result.messages);
        std::uint32_t input = round.speaker == Party::alice ? alice_input : bob_input;
        std::uint32_t m = round.message(input, received);
        if (round.width < 32 && (m >> round.width) != 0) {
            throw UsageError("exact protocol message wider than its declared width");
        }
        result.messages.push_back(m);
    }
    auto alice_received = received_before(*this, rounds.size(), Party::alice, result.messages);
    result.output = output(alice_input, alice_received);
    return result;
}

ExactProtocol ExactProtocol::negated() const {
    ExactProtocol result = *this;
    result.name = "not(" + name + ")";
    auto inner = output;
    result.output = [inner](std::uint32_t a, std::span<const std::uint32_t> received) { return !inner(a, received); };
    return result;
}

ExactProtocol symcomm::trivial_exact_protocol(unsigned j, unsigned k, std::shared_ptr<const std::vector<std::uint8_t>> table) {
    if (!table || table->size() != (std::size_t{1} << (j + k))) {
        throw InputError("truth table size must be 2^(j+k)");
    }
    ExactProtocol p;
    if (j == 1 && k == 1) {
        const auto &t = *table;
        bool is_and = t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 1;
        bool is_xor = t[0] == 0 && t[1] == 1 && t[2] == 1 && t[3] == 0;
        if (is_and || is_xor) {
            p.name = is_and ? "and2-one-message" : "xor2-one-message";
            p.rounds.push_back(ExactRound{Party::bob, 1, [](std::uint32_t b, std::span<const std::uint32_t>) { return b & 1; }});
            if (is_and) {
                p.output = [](std::uint32_t a, std::span<const std::uint32_t> rec) { return (a & rec[0] & 1) != 0; };
            } else {
                p.output = [](std::uint32_t a, std::span<const std::uint32_t> rec) { return ((a ^ rec[0]) & 1) != 0; };
            }
            p.output_known_to_bob = false;
            return p;
        }
    }
    p.name = "send-alice-input";
    p.rounds.push_back(ExactRound{Party::alice, j, [](std::uint32_t a, std::span<const std::uint32_t>) { return a; }});
    p.rounds.push_back(ExactRound{Party::bob, 1, [table, k](std::uint32_t b, std::span<const std::uint32_t> rec) {
                                      return static_cast<std::uint32_t>((*table)[(rec[0] << k) | b]);
                                  }});
    p.output = [](std::uint32_t, std::span<const std::uint32_t> rec) { return rec[0] != 0; };
    p.output_known_to_bob = true;
    return p;
}
