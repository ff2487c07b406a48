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

#include "symcomm/cost_ledger.h"

#include "symcomm/errors.h"

using namespace symcomm;

CostLedger &CostLedger::operator+=(const CostLedger &other) {
    qubits_sim += other.qubits_sim;
    qubits_claimed += other.qubits_claimed;
    classical_bits += other.classical_bits;
    shared_random_bits += other.shared_random_bits;
    epr_pairs += other.epr_pairs;
    rounds += other.rounds;
    return *this;
}

CostLedger symcomm::operator+(CostLedger a, const CostLedger &b) {
    a += b;
    return a;
}

std::string_view symcomm::to_string(Resource r) {
    switch (r) {
        case Resource::qubits_sim:
            return "qubits_sim";
        case Resource::qubits_claimed:
            return "qubits_claimed";
        case Resource::classical_bits:
            return "classical_bits";
        case Resource::shared_random_bits:
            return "shared_random_bits";
    }
    return "?";
}

CostLedger symcomm::totals_from_transcript(const std::vector<TranscriptEntry> &transcript) {
    CostLedger totals;
    std::optional<Party> last;
    for (const auto &e : transcript) {
        switch (e.resource) {
            case Resource::qubits_sim:
                totals.qubits_sim += e.width;
                break;
            case Resource::qubits_claimed:
                totals.qubits_claimed += e.width;
                break;
            case Resource::classical_bits:
                totals.classical_bits += e.width;
                break;
            case Resource::shared_random_bits:
                totals.shared_random_bits += e.width;
                break;
        }
        if (e.speaker.has_value() && e.speaker != last) {
            totals.rounds++;
            last = e.speaker;
        }
    }
    return totals;
}

void Channel::append(std::optional<Party> speaker, Resource resource, std::uint64_t width, std::string_view tag) {
    transcript_.push_back(TranscriptEntry{speaker, resource, width, tag});
}

void Channel::throw_exchange_with_transcript() {
    throw UsageError("send_bits_exchange needs a channel without a transcript");
}
