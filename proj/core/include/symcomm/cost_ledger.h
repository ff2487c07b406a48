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

#ifndef SYMCOMM_COST_LEDGER_H
#define SYMCOMM_COST_LEDGER_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symcomm/party.h"

namespace symcomm {

/// Metered communication of one or more protocol runs. Merging is field-wise addition.
struct CostLedger {
    /// Qubits actually moved between parties by the statevector simulator.
    std::uint64_t qubits_sim = 0;
    /// Qubits under the paper-style accounting (2 qccE(G) per coherent query plus index overhead).
    std::uint64_t qubits_claimed = 0;
    std::uint64_t classical_bits = 0;
    std::uint64_t shared_random_bits = 0;
    /// Never incremented by any protocol in this library; kept so that the zero is checked rather than assumed.
    std::uint64_t epr_pairs = 0;
    /// Number of maximal same-speaker runs of messages.
    std::uint64_t rounds = 0;

    CostLedger &operator+=(const CostLedger &other);
    bool operator==(const CostLedger &other) const = default;
};

CostLedger operator+(CostLedger a, const CostLedger &b);

enum class Resource : std::uint8_t { qubits_sim, qubits_claimed, classical_bits, shared_random_bits };

std::string_view to_string(Resource r);

/// Phase labels attached to transcript entries.
namespace phase {
inline constexpr std::string_view index_sync = "index-sync";
inline constexpr std::string_view g_compute = "G-subprotocol";
inline constexpr std::string_view g_uncompute = "G-uncompute";
inline constexpr std::string_view query_claimed = "query-claimed";
inline constexpr std::string_view sync_claimed = "index-sync-claimed";
inline constexpr std::string_view verify = "verify";
inline constexpr std::string_view sample_map = "sample-map";
inline constexpr std::string_view random_check = "random-check";
inline constexpr std::string_view weight_check = "weight-check";
inline constexpr std::string_view bucket_filter = "bucket-filter";
inline constexpr std::string_view hash_seed = "hash-seed";
inline constexpr std::string_view weight_exchange = "weight-exchange";
inline constexpr std::string_view newman_seed = "newman-seed";
inline constexpr std::string_view test_send = "test";
}  // namespace phase

/// One metered event. Tags must have static storage duration (use the phase:: constants).
struct TranscriptEntry {
    std::optional<Party> speaker;
    Resource resource;
    std::uint64_t width;
    std::string_view tag;
};

/// The communication channel between Alice and Bob: every message, claimed cost, and shared coin
/// goes through here, which keeps the ledger and the transcript in lockstep.
class Channel {
   public:
    explicit Channel(bool keep_transcript = true) : keep_transcript_(keep_transcript) {
    }

    void send_qubits(Party from, std::uint64_t width, std::string_view tag) {
        if (width != 0) {
            note_speaker(from);
            ledger_.qubits_sim += width;
            record(from, Resource::qubits_sim, width, tag);
        }
    }
    void send_bits(Party from, std::uint64_t bits, std::string_view tag) {
        if (bits != 0) {
            note_speaker(from);
            ledger_.classical_bits += bits;
            record(from, Resource::classical_bits, bits, tag);
        }
    }
    /// Meters a fixed multi-message exchange of `bits` classical bits spread over `turns` speaker
    /// turns that starts with `first` and ends with `last`, with the same ledger effect as the
    /// individual sends. Only for channels without a transcript; throws UsageError otherwise.
    void send_bits_exchange(Party first, Party last, std::uint64_t turns, std::uint64_t bits) {
        if (keep_transcript_) {
            throw_exchange_with_transcript();
        }
        if (bits == 0) {
            return;
        }
        note_speaker(first);
        ledger_.rounds += turns - 1;
        last_speaker_ = last;
        ledger_.classical_bits += bits;
    }
    void claim_qubits(std::uint64_t qubits, std::string_view tag) {
        if (qubits != 0) {
            ledger_.qubits_claimed += qubits;
            record(std::nullopt, Resource::qubits_claimed, qubits, tag);
        }
    }
    void consume_shared(std::uint64_t bits, std::string_view tag) {
        if (bits != 0) {
            ledger_.shared_random_bits += bits;
            record(std::nullopt, Resource::shared_random_bits, bits, tag);
        }
    }

    const CostLedger &ledger() const {
        return ledger_;
    }
    bool keeps_transcript() const {
        return keep_transcript_;
    }
    const std::vector<TranscriptEntry> &transcript() const {
        return transcript_;
    }

   private:
    void record(std::optional<Party> speaker, Resource resource, std::uint64_t width, std::string_view tag) {
        if (keep_transcript_) {
            append(speaker, resource, width, tag);
        }
    }
    [[noreturn]] static void throw_exchange_with_transcript();
    // Out of line so the metering calls stay cheap when no transcript is kept.
    void append(std::optional<Party> speaker, Resource resource, std::uint64_t width, std::string_view tag);
    void note_speaker(Party from) {
        if (last_speaker_ != from) {
            ledger_.rounds++;
            last_speaker_ = from;
        }
    }

    bool keep_transcript_;
    CostLedger ledger_;
    std::vector<TranscriptEntry> transcript_;
    std::optional<Party> last_speaker_;
};

/// Re-derives ledger totals from a transcript (rounds counted as speaker alternations).
CostLedger totals_from_transcript(const std::vector<TranscriptEntry> &transcript);

/// Result payload plus the metering that produced it.
template <typename T>
struct ProtocolOutcome {
    T value;
    CostLedger ledger;
    std::vector<TranscriptEntry> transcript;
};

template <typename T>
ProtocolOutcome<T> make_outcome(T value, const Channel &channel) {
    return ProtocolOutcome<T>{std::move(value), channel.ledger(), channel.transcript()};
}

}  // namespace symcomm

#endif
