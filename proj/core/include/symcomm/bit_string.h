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

#ifndef SYMCOMM_BIT_STRING_H
#define SYMCOMM_BIT_STRING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symcomm {

/// A fixed-length string over {0,1}. Index 0 is the leftmost character of the textual form.
class BitString {
   public:
    BitString() = default;
    explicit BitString(std::size_t length, bool value = false);

    /// Parses a string of '0'/'1' characters; throws InputError on anything else.
    static BitString parse(std::string_view text);
    static BitString from_support(std::size_t length, std::span<const std::size_t> ones);

    std::size_t size() const {
        return bits_.size();
    }
    bool operator[](std::size_t i) const {
        return bits_[i] != 0;
    }
    void set(std::size_t i, bool value) {
        bits_[i] = value ? 1 : 0;
    }

    std::size_t weight() const;
    BitString negated() const;
    std::vector<std::size_t> support() const;
    std::string str() const;

    friend BitString operator&(const BitString &a, const BitString &b);
    friend BitString operator|(const BitString &a, const BitString &b);
    friend BitString operator^(const BitString &a, const BitString &b);
    bool operator==(const BitString &other) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

BitString operator&(const BitString &a, const BitString &b);
BitString operator|(const BitString &a, const BitString &b);
BitString operator^(const BitString &a, const BitString &b);

/// Number of ones in x.
std::size_t hamming_weight(const BitString &x);

}  // namespace symcomm

#endif
