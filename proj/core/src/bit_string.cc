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

#include "symcomm/bit_string.h"

#include <algorithm>

#include "symcomm/errors.h"

using namespace symcomm;

BitString::BitString(std::size_t length, bool value) : bits_(length, value ? 1 : 0) {
}

BitString BitString::parse(std::string_view text) {
    BitString result(text.size());
    for (std::size_t i = 0; i < text.size(); i++) {
        if (text[i] != '0' && text[i] != '1') {
            throw InputError("bit string may only contain '0' and '1', got '" + std::string(text) + "'");
        }
        result.bits_[i] = text[i] == '1';
    }
    return result;
}

BitString BitString::from_support(std::size_t length, std::span<const std::size_t> ones) {
    BitString result(length);
    for (auto i : ones) {
        if (i >= length) {
            throw InputError("support index out of range");
        }
        result.bits_[i] = 1;
    }
    return result;
}

std::size_t BitString::weight() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

BitString BitString::negated() const {
    BitString result(size());
    for (std::size_t i = 0; i < size(); i++) {
        result.bits_[i] = bits_[i] ^ 1;
    }
    return result;
}

std::vector<std::size_t> BitString::support() const {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < size(); i++) {
        if (bits_[i]) {
            result.push_back(i);
        }
    }
    return result;
}

std::string BitString::str() const {
    std::string result(size(), '0');
    for (std::size_t i = 0; i < size(); i++) {
        if (bits_[i]) {
            result[i] = '1';
        }
    }
    return result;
}

namespace {

template <typename OP>
BitString zip(const BitString &a, const BitString &b, OP op) {
    if (a.size() != b.size()) {
        throw InputError("bit strings differ in length");
    }
    BitString result(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        result.set(i, op(a[i], b[i]));
    }
    return result;
}

}  // namespace

BitString symcomm::operator&(const BitString &a, const BitString &b) {
    return zip(a, b, [](bool u, bool v) { return u && v; });
}

BitString symcomm::operator|(const BitString &a, const BitString &b) {
    return zip(a, b, [](bool u, bool v) { return u || v; });
}

BitString symcomm::operator^(const BitString &a, const BitString &b) {
    return zip(a, b, [](bool u, bool v) { return u != v; });
}

std::size_t symcomm::hamming_weight(const BitString &x) {
    return x.weight();
}
