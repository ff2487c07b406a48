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

#include "symcomm/random_tape.h"

#include <algorithm>
#include <bit>

#include "symcomm/errors.h"

using namespace symcomm;

namespace {
constexpr std::uint64_t kSeedGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t symcomm::derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix64(base ^ mix64(stream + kSeedGamma));
}

std::string_view symcomm::to_string(TapeKind kind) {
    switch (kind) {
        case TapeKind::shared:
            return "shared";
        case TapeKind::alice_private:
            return "alice";
        case TapeKind::bob_private:
            return "bob";
    }
    return "?";
}

RandomTape::RandomTape(std::uint64_t seed, TapeKind kind) : seed_(seed), kind_(kind) {
}

RandomTape RandomTape::private_to(Party party, std::uint64_t seed) {
    return RandomTape(seed, party == Party::alice ? TapeKind::alice_private : TapeKind::bob_private);
}

std::uint64_t RandomTape::draw_word_checked(unsigned bits) {
    if (bits > 64) {
        throw InputError("draw_word supports at most 64 bits");
    }
    return 0;
}

BitString RandomTape::draw_bits(std::size_t m) {
    BitString result(m);
    std::size_t i = 0;
    while (i < m) {
        unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(64, m - i));
        std::uint64_t word = draw_word(chunk);
        for (unsigned b = 0; b < chunk; b++) {
            result.set(i + b, (word >> b) & 1);
        }
        i += chunk;
    }
    return result;
}

std::uint64_t RandomTape::uniform_checked(std::uint64_t bound) {
    if (bound == 0) {
        throw InputError("uniform() needs a positive bound");
    }
    return 0;
}

double RandomTape::uniform_real() {
    return static_cast<double>(draw_word(53)) * 0x1.0p-53;
}

RandomTape RandomTape::split(TapeKind kind) {
    splits_++;
    return RandomTape(derive_seed(seed_, splits_ * 0x632BE59BD9B4E019ULL + static_cast<std::uint64_t>(kind)), kind);
}
