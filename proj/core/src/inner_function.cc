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

#include "symcomm/inner_function.h"

#include "symcomm/errors.h"

using namespace symcomm;

namespace {
constexpr unsigned kMaxInputBits = 20;
}

InnerFunction::InnerFunction(unsigned j,
                             unsigned k,
                             std::shared_ptr<const std::vector<std::uint8_t>> table,
                             ExactProtocol protocol,
                             std::string name)
    : j_(j), k_(k), table_(std::move(table)), exact_(std::move(protocol)), name_(std::move(name)) {
    check_protocol();
    qcc_e_ = exact_.compute_cost();
    auto append = [this](Party speaker, unsigned width) {
        if (width == 0) {
            return;
        }
        classical_bits_ += width;
        if (!classical_runs_.empty() && classical_runs_.back().speaker == speaker) {
            classical_runs_.back().width += width;
        } else {
            classical_runs_.push_back(ExactRound{speaker, width});
        }
    };
    for (const auto &r : exact_.rounds) {
        append(r.speaker, r.width);
    }
    if (!exact_.output_known_to_bob) {
        append(Party::alice, 1);
    }
}

void InnerFunction::check_protocol() const {
    for (std::uint32_t a = 0; a < (1u << j_); a++) {
        for (std::uint32_t b = 0; b < (1u << k_); b++) {
            if (exact_.replay(a, b).output != (*this)(a, b)) {
                throw InputError("exact protocol '" + exact_.name + "' disagrees with the truth table of " + name_);
            }
        }
    }
}

static std::shared_ptr<const std::vector<std::uint8_t>> checked_table(unsigned j, unsigned k, std::vector<std::uint8_t> table) {
    if (j == 0 || k == 0 || j + k > kMaxInputBits) {
        throw InputError("inner function widths must satisfy 1 <= j, k and j + k <= 20");
    }
    if (table.size() != (std::size_t{1} << (j + k))) {
        throw InputError("truth table size must be 2^(j+k)");
    }
    for (auto v : table) {
        if (v > 1) {
            throw InputError("truth table entries must be 0 or 1");
        }
    }
    return std::make_shared<const std::vector<std::uint8_t>>(std::move(table));
}

InnerFunction InnerFunction::from_truth_table(unsigned j, unsigned k, std::vector<std::uint8_t> table, std::string name) {
    auto t = checked_table(j, k, std::move(table));
    auto protocol = trivial_exact_protocol(j, k, t);
    if (name.empty()) {
        name = "tt:" + std::to_string(j) + ":" + std::to_string(k);
    }
    return InnerFunction(j, k, std::move(t), std::move(protocol), std::move(name));
}

InnerFunction InnerFunction::with_protocol(unsigned j, unsigned k, std::vector<std::uint8_t> table, ExactProtocol protocol, std::string name) {
    return InnerFunction(j, k, checked_table(j, k, std::move(table)), std::move(protocol), std::move(name));
}

InnerFunction InnerFunction::and2() {
    return from_truth_table(1, 1, {0, 0, 0, 1}, "and2");
}

InnerFunction InnerFunction::xor2() {
    return from_truth_table(1, 1, {0, 1, 1, 0}, "xor2");
}

InnerFunction InnerFunction::negated() const {
    std::vector<std::uint8_t> t = *table_;
    for (auto &v : t) {
        v ^= 1;
    }
    return InnerFunction(j_, k_, std::make_shared<const std::vector<std::uint8_t>>(std::move(t)), exact_.negated(), "not(" + name_ + ")");
}
