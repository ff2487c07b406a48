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

#ifndef SYMCOMM_RANDOM_TAPE_H
#define SYMCOMM_RANDOM_TAPE_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "symcomm/bit_string.h"
#include "symcomm/party.h"

namespace symcomm {

enum class TapeKind : std::uint8_t { shared, alice_private, bob_private };

std::string_view to_string(TapeKind kind);

/// SplitMix64 output function.
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Number of bits needed to write values in [0, bound): ceil(log2(bound)), 0 for bound <= 1.
inline unsigned ceil_log2(std::uint64_t bound) {
    return bound <= 1 ? 0 : 64 - static_cast<unsigned>(std::countl_zero(bound - 1));
}

/// Seed for stream `stream` of a family rooted at `base`. Used for per-trial seeds in sweeps.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// An addressable stream of random bits.
///
/// The tape is SplitMix64 run in counter mode: bit p of the tape is bit (p mod 64) of
/// mix64(seed + (p/64 + 1) * 0x9E3779B97F4A7C15). Draws consume bits strictly in order, so two
/// tapes built from the same seed agree at every position regardless of how the draws are
/// chunked. A shared tape stands for public coins: both parties read the same object.
class RandomTape {
   public:
    explicit RandomTape(std::uint64_t seed, TapeKind kind = TapeKind::shared);

    static RandomTape shared(std::uint64_t seed) {
        return RandomTape(seed, TapeKind::shared);
    }
    static RandomTape private_to(Party party, std::uint64_t seed);

    std::uint64_t seed() const {
        return seed_;
    }
    TapeKind kind() const {
        return kind_;
    }
    bool is_shared() const {
        return kind_ == TapeKind::shared;
    }
    /// Number of bits consumed so far; also the position of the next bit.
    std::uint64_t bits_drawn() const {
        return position_;
    }

    BitString draw_bits(std::size_t m);
    /// Next `bits` bits (at most 64) as an integer, first drawn bit least significant.
    std::uint64_t draw_word(unsigned bits) {
        if (bits == 0 || bits > 64) {
            return draw_word_checked(bits);
        }
        std::uint64_t word_index = position_ >> 6;
        unsigned offset = position_ & 63;
        std::uint64_t value = block(word_index) >> offset;
        unsigned have = 64 - offset;
        if (have < bits) {
            value |= block(word_index + 1) << have;
        }
        position_ += bits;
        return bits < 64 ? value & ((std::uint64_t{1} << bits) - 1) : value;
    }
    /// Uniform value in [0, bound) by rejection over ceil(log2(bound))-bit words. bound == 1 draws nothing.
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound <= 1) {
            return uniform_checked(bound);
        }
        unsigned bits = ceil_log2(bound);
        while (true) {
            std::uint64_t v = draw_word(bits);
            if (v < bound) {
                return v;
            }
        }
    }
    /// Uniform double in [0, 1) from 53 bits.
    double uniform_real();

    /// Independent child tape. Does not consume bits of this tape, but successive calls yield
    /// different children.
    RandomTape split(TapeKind kind);

   private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    std::uint64_t block(std::uint64_t index) {
        if (index != cached_index_) {
            cached_index_ = index;
            cached_block_ = mix64(seed_ + (index + 1) * kGamma);
        }
        return cached_block_;
    }
    std::uint64_t draw_word_checked(unsigned bits);
    std::uint64_t uniform_checked(std::uint64_t bound);

    std::uint64_t seed_;
    TapeKind kind_;
    std::uint64_t position_ = 0;
    std::uint64_t splits_ = 0;
    std::uint64_t cached_index_ = ~std::uint64_t{0};
    std::uint64_t cached_block_ = 0;
};


}  // namespace symcomm

#endif
