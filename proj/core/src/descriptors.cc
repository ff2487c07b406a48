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

#include "symcomm/descriptors.h"

#include <charconv>
#include <vector>

#include "symcomm/errors.h"

using namespace symcomm;

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw InputError("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::size_t require_n(std::optional<std::size_t> n, std::string_view descriptor) {
    if (!n.has_value()) {
        throw InputError("descriptor '" + std::string(descriptor) + "' needs an explicit n");
    }
    return *n;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

}  // namespace

SymmetricSpec symcomm::parse_outer(std::string_view descriptor, std::optional<std::size_t> n) {
    std::vector<std::uint8_t> table;
    if (descriptor == "or") {
        table.assign(require_n(n, descriptor) + 1, 1);
        table[0] = 0;
    } else if (descriptor == "and") {
        table.assign(require_n(n, descriptor) + 1, 0);
        table.back() = 1;
    } else if (descriptor == "parity") {
        std::size_t m = require_n(n, descriptor);
        for (std::size_t w = 0; w <= m; w++) {
            table.push_back(w & 1);
        }
    } else if (descriptor.starts_with("thr:")) {
        std::size_t t = parse_count(descriptor.substr(4), "threshold");
        std::size_t m = require_n(n, descriptor);
        for (std::size_t w = 0; w <= m; w++) {
            table.push_back(w >= t ? 1 : 0);
        }
    } else if (descriptor.starts_with("table:")) {
        auto bits = descriptor.substr(6);
        if (bits.empty()) {
            throw InputError("table: descriptor needs at least one bit");
        }
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw InputError("table: descriptor may only contain 0/1, got '" + std::string(bits) + "'");
            }
            table.push_back(c == '1');
        }
        if (n.has_value() && *n + 1 != table.size()) {
            throw InputError("table has " + std::to_string(table.size()) + " entries but n = " + std::to_string(*n));
        }
    } else {
        throw InputError("unknown outer function descriptor '" + std::string(descriptor) + "'");
    }
    return SymmetricSpec::from_table(std::move(table));
}

std::shared_ptr<const InnerFunction> symcomm::parse_inner(std::string_view descriptor) {
    if (descriptor == "and2") {
        return std::make_shared<const InnerFunction>(InnerFunction::and2());
    }
    if (descriptor == "xor2") {
        return std::make_shared<const InnerFunction>(InnerFunction::xor2());
    }
    if (!descriptor.starts_with("tt:")) {
        throw InputError("unknown inner function descriptor '" + std::string(descriptor) + "'");
    }
    auto rest = descriptor.substr(3);
    auto c1 = rest.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
        throw InputError("expected tt:<j>:<k>:<hex>, got '" + std::string(descriptor) + "'");
    }
    auto j = parse_count(rest.substr(0, c1), "j");
    auto k = parse_count(rest.substr(c1 + 1, c2 - c1 - 1), "k");
    auto hex = rest.substr(c2 + 1);
    if (j == 0 || k == 0 || j + k > 20) {
        throw InputError("tt: widths must satisfy 1 <= j, k and j + k <= 20");
    }
    std::size_t rows = std::size_t{1} << (j + k);
    std::size_t digits = (rows + 3) / 4;
    if (hex.size() != digits) {
        throw InputError("tt:" + std::to_string(j) + ":" + std::to_string(k) + " needs exactly " + std::to_string(digits) + " hex digits");
    }
    std::vector<std::uint8_t> table(rows, 0);
    for (std::size_t d = 0; d < digits; d++) {
        int v = hex_value(hex[digits - 1 - d]);
        if (v < 0) {
            throw InputError("bad hex digit in '" + std::string(hex) + "'");
        }
        for (int b = 0; b < 4; b++) {
            std::size_t row = 4 * d + b;
            bool bit = (v >> b) & 1;
            if (row >= rows) {
                if (bit) {
                    throw InputError("truth table hex sets bits beyond 2^(j+k)");
                }
                continue;
            }
            table[row] = bit;
        }
    }
    return std::make_shared<const InnerFunction>(
        InnerFunction::from_truth_table(static_cast<unsigned>(j), static_cast<unsigned>(k), std::move(table), std::string(descriptor)));
}

std::string symcomm::truth_table_hex(const InnerFunction &g) {
    const auto &t = g.truth_table();
    std::size_t digits = (t.size() + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; d++) {
        int v = 0;
        for (int b = 0; b < 4; b++) {
            std::size_t row = 4 * d + b;
            if (row < t.size() && t[row]) {
                v |= 1 << b;
            }
        }
        out[digits - 1 - d] = "0123456789abcdef"[v];
    }
    return out;
}
