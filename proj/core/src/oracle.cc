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

#include <string>
#include <vector>

#include "metering.h"
#include "symcomm/errors.h"

using namespace symcomm;

unsigned symcomm::index_width(std::size_t count) {
    return std::max(1u, ceil_log2(count));
}

namespace {

// Messages delivered to `party` before round r, as indices into the round list.
std::vector<std::size_t> inbox(const ExactProtocol &p, std::size_t r, Party party) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < r; q++) {
        if (p.rounds[q].speaker != party) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<RegisterId> pick(const std::vector<RegisterId> &msgs, const std::vector<std::size_t> &which) {
    std::vector<RegisterId> out;
    for (auto q : which) {
        out.push_back(msgs[q]);
    }
    return out;
}

// Table over (index value, received messages): index in the low w bits, then messages in order.
template <typename F>
std::vector<std::uint64_t> tabulate(const ExactProtocol &p, unsigned w, const std::vector<std::size_t> &received, F &&entry) {
    unsigned cw = w;
    for (auto q : received) {
        cw += p.rounds[q].width;
    }
    std::vector<std::uint64_t> masks(std::size_t{1} << cw, 0);
    std::vector<std::uint32_t> rec(received.size());
    for (std::size_t c = 0; c < masks.size(); c++) {
        std::uint64_t rest = c >> w;
        for (std::size_t m = 0; m < received.size(); m++) {
            unsigned mw = p.rounds[received[m]].width;
            rec[m] = static_cast<std::uint32_t>(rest & ((std::uint64_t{1} << mw) - 1));
            rest >>= mw;
        }
        masks[c] = entry(c & ((std::size_t{1} << w) - 1), std::span<const std::uint32_t>(rec));
    }
    return masks;
}

}  // namespace

OracleCircuit::OracleCircuit(const Instance &instance, std::span<const std::size_t> positions, unsigned index_width)
    : instance_(instance), w_(index_width) {
    if (w_ < symcomm::index_width(positions.size()) || w_ > 16) {
        throw InputError("oracle index width does not fit the position set");
    }
    for (auto p : positions) {
        if (p >= instance.size()) {
            throw InputError("oracle position out of range");
        }
    }
    const auto &proto = instance.g().exact();
    copy_.resize(std::size_t{1} << w_);
    for (std::size_t c = 0; c < copy_.size(); c++) {
        copy_[c] = c;
    }
    for (std::size_t r = 0; r < proto.rounds.size(); r++) {
        const auto &round = proto.rounds[r];
        std::uint64_t width_mask = (std::uint64_t{1} << round.width) - 1;
        rounds_.push_back(tabulate(proto, w_, inbox(proto, r, round.speaker), [&](std::size_t i, std::span<const std::uint32_t> rec) -> std::uint64_t {
            if (i >= positions.size()) {
                return 0;
            }
            std::size_t pos = positions[i];
            std::uint32_t input = round.speaker == Party::alice ? instance.alice_input(pos) : instance.bob_input(pos);
            return round.message(input, rec) & width_mask;
        }));
    }
    // Identity on excluded and padding indices.
    output_ = tabulate(proto, w_, inbox(proto, proto.rounds.size(), Party::alice), [&](std::size_t i, std::span<const std::uint32_t> rec) -> std::uint64_t {
        if (i >= positions.size() || instance.excluded(positions[i])) {
            return 0;
        }
        return proto.output(instance.alice_input(positions[i]), rec) ? 1 : 0;
    });
}

void OracleCircuit::apply(DistState &state, RegisterId index, RegisterId target, Channel &channel) const {
    if (state.owner(index) != Party::alice || state.owner(target) != Party::alice) {
        throw LocalityError("oracle index and target registers must be held by Alice");
    }
    if (state.width(index) != w_ || state.width(target) != 1) {
        throw InputError("oracle register widths do not match the circuit");
    }
    const auto &proto = instance_.g().exact();

    // Coherent index copy for Bob.
    RegisterId bob_index = state.alloc(Party::alice, w_);
    state.apply(Party::alice, XorFamily{{index}, {bob_index}, copy_});
    state.send(bob_index, Party::bob, channel, phase::index_sync);

    std::vector<RegisterId> msgs;
    for (std::size_t r = 0; r < proto.rounds.size(); r++) {
        Party speaker = proto.rounds[r].speaker;
        RegisterId own_index = speaker == Party::alice ? index : bob_index;
        std::vector<RegisterId> controls{own_index};
        for (auto reg : pick(msgs, inbox(proto, r, speaker))) {
            controls.push_back(reg);
        }
        RegisterId m = state.alloc(speaker, proto.rounds[r].width);
        state.apply(speaker, XorFamily{std::move(controls), {m}, rounds_[r]});
        state.send(m, other(speaker), channel, phase::g_compute);
        msgs.push_back(m);
    }

    std::vector<RegisterId> out_controls{index};
    for (auto reg : pick(msgs, inbox(proto, proto.rounds.size(), Party::alice))) {
        out_controls.push_back(reg);
    }
    state.apply(Party::alice, XorFamily{std::move(out_controls), {target}, output_});

    for (std::size_t r = proto.rounds.size(); r-- > 0;) {
        Party speaker = proto.rounds[r].speaker;
        RegisterId m = msgs[r];
        state.send(m, speaker, channel, phase::g_uncompute);
        std::vector<RegisterId> controls{speaker == Party::alice ? index : bob_index};
        for (auto reg : pick(msgs, inbox(proto, r, speaker))) {
            controls.push_back(reg);
        }
        state.apply(speaker, XorFamily{std::move(controls), {m}, rounds_[r]});
        state.release(m);
    }

    state.send(bob_index, Party::alice, channel, phase::index_sync);
    state.apply(Party::alice, XorFamily{{index}, {bob_index}, copy_});
    state.release(bob_index);

    claim_oracle_query(instance_, channel);
}

void symcomm::apply_oracle(DistState &state,
                           const Instance &instance,
                           std::span<const std::size_t> positions,
                           RegisterId index,
                           RegisterId target,
                           Channel &channel) {
    if (state.owner(index) != Party::alice || state.owner(target) != Party::alice) {
        throw LocalityError("oracle index and target registers must be held by Alice");
    }
    OracleCircuit(instance, positions, state.width(index)).apply(state, index, target, channel);
}

void symcomm::claim_oracle_query(const Instance &instance, Channel &channel) {
    channel.claim_qubits(2ull * instance.g().qcc_e(), phase::query_claimed);
}

[[noreturn]] void symcomm::detail::throw_coordinate_out_of_range(std::size_t i) {
    throw InputError("coordinate " + std::to_string(i) + " out of range");
}

namespace {

// One message per protocol round, for channels that keep a transcript.
[[gnu::noinline]] void send_protocol_messages(const ExactProtocol &proto, Channel &channel, std::string_view tag) {
    for (const auto &round : proto.rounds) {
        channel.send_bits(round.speaker, round.width, tag);
    }
    if (!proto.output_known_to_bob) {
        channel.send_bits(Party::alice, 1, tag);
    }
}

}  // namespace

bool symcomm::classical_eval_g(const Instance &instance, std::size_t i, Channel &channel, std::string_view tag) {
    if (i >= instance.size()) {
        detail::throw_coordinate_out_of_range(i);
    }
    channel.send_bits(Party::alice, ceil_log2(instance.size()), tag);
    // The protocol was checked against the table on every input when G was built.
    const InnerFunction &g = instance.g();
    if (channel.keeps_transcript()) {
        send_protocol_messages(g.exact(), channel, tag);
    } else if (const auto &runs = g.classical_runs(); !runs.empty()) {
        channel.send_bits_exchange(runs.front().speaker, runs.back().speaker, runs.size(), g.classical_bits());
    }
    return instance.value(i);
}
