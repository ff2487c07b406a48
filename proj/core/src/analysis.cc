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

#include "symcomm/analysis.h"

#include <cmath>

#include "symcomm/random_tape.h"

using namespace symcomm;

namespace {

double log2_log2(double n) {
    if (n <= 2) {
        return 0;
    }
    return std::log2(std::log2(n));
}

}  // namespace

std::pair<std::size_t, std::size_t> symcomm::compute_l0_l1(std::span<const std::uint8_t> table) {
    std::size_t n = table.empty() ? 0 : table.size() - 1;
    std::size_t l0 = 0;
    for (std::size_t l = 1; 2 * l <= n; l++) {
        if (table[l] != table[l - 1]) {
            l0 = l;
        }
    }
    std::size_t l1 = 0;
    for (std::size_t l = (n + 1) / 2; l < n; l++) {
        if (table[l] != table[l + 1]) {
            l1 = std::max(l1, n - l);
        }
    }
    return {l0, l1};
}

double symcomm::query_bound(const SymmetricSpec &f) {
    return std::sqrt(static_cast<double>(f.n()) * static_cast<double>(f.l0() + f.l1()));
}

double symcomm::razborov_bound(const SymmetricSpec &f) {
    return std::sqrt(static_cast<double>(f.n()) * static_cast<double>(f.l0())) + static_cast<double>(f.l1());
}

FoolingSetBound symcomm::fooling_set_bound(std::size_t n, std::size_t l1) {
    FoolingSetBound out;
    if (l1 == 0 || l1 - 1 > n) {
        out.size = boost::multiprecision::cpp_int(0);
        return out;
    }
    std::size_t k = l1 - 1;
    if (n <= 64) {
        boost::multiprecision::cpp_int c = 1;
        for (std::size_t i = 0; i < k; i++) {
            c = c * (n - i) / (i + 1);
        }
        out.size = c;
        // Exact up to double rounding; C(64, 32) < 2^63.
        out.log_size = std::log2(c.convert_to<double>());
    } else {
        double ln = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
        out.log_size = ln / std::log(2.0);
    }
    out.log_log_size = out.log_size > 1 ? std::log2(out.log_size) : 0;
    return out;
}

std::vector<BitString> symcomm::enumerate_fooling_set(std::size_t n, std::size_t l1) {
    std::vector<BitString> out;
    if (l1 == 0 || l1 - 1 > n) {
        return out;
    }
    std::size_t zeros = l1 - 1;
    // Walk the zero positions in lexicographic order.
    std::vector<std::size_t> pos(zeros);
    for (std::size_t i = 0; i < zeros; i++) {
        pos[i] = i;
    }
    while (true) {
        BitString x(n, true);
        for (auto p : pos) {
            x.set(p, false);
        }
        out.push_back(std::move(x));
        std::size_t i = zeros;
        while (i > 0 && pos[i - 1] == n - zeros + i - 1) {
            i--;
        }
        if (i == 0) {
            break;
        }
        pos[i - 1]++;
        for (std::size_t j = i; j < zeros; j++) {
            pos[j] = pos[j - 1] + 1;
        }
    }
    return out;
}

bool symcomm::check_fooling_property(const SymmetricSpec &f, std::span<const BitString> set) {
    for (std::size_t a = 0; a < set.size(); a++) {
        for (std::size_t b = 0; b < set.size(); b++) {
            bool v = f((set[a] & set[b]));
            if (v != (a == b)) {
                return false;
            }
        }
    }
    return true;
}

std::string_view symcomm::to_string(Classification c) {
    switch (c) {
        case Classification::constant:
            return "constant";
        case Classification::and_like:
            return "AND-like";
        case Classification::negand_like:
            return "negAND-like";
        case Classification::general:
            return "general";
    }
    return "unknown";
}

std::string_view symcomm::to_string(LowerRegime r) {
    switch (r) {
        case LowerRegime::none:
            return "none";
        case LowerRegime::theta_one:
            return "theta-1";
        case LowerRegime::l0_positive:
            return "l0-positive";
        case LowerRegime::l0_zero:
            return "l0-zero";
    }
    return "unknown";
}

PrivateLower symcomm::classify_and_private_lower(const SymmetricSpec &f) {
    PrivateLower out;
    if (f.is_constant()) {
        return out;
    }
    const auto &t = f.table();
    std::size_t n = f.n();
    bool prefix_equal = true;
    for (std::size_t w = 1; w < n; w++) {
        prefix_equal = prefix_equal && t[w] == t[0];
    }
    if (prefix_equal) {
        // Non-constant and equal below n: exactly AND_n or its negation.
        out.classification = t[n] ? Classification::and_like : Classification::negand_like;
        out.regime = LowerRegime::theta_one;
        return out;
    }
    out.classification = Classification::general;
    out.regime = f.l0() > 0 ? LowerRegime::l0_positive : LowerRegime::l0_zero;
    out.value = razborov_bound(f) + log2_log2(static_cast<double>(n));
    return out;
}

unsigned symcomm::newman_budget(std::size_t n, std::size_t l1) {
    // Smallest c with n + 1 <= 2^(2^c); c = 6 covers every 64-bit n.
    unsigned c = 0;
    while (c < 6 && static_cast<std::uint64_t>(n) + 1 > (std::uint64_t{1} << (std::uint64_t{1} << c))) {
        c++;
    }
    return ceil_log2(static_cast<std::uint64_t>(l1) + 1) + c;
}

AnalysisReport symcomm::analyze(const SymmetricSpec &f) {
    AnalysisReport r;
    r.n = f.n();
    r.l0 = f.l0();
    r.l1 = f.l1();
    r.query_bound = query_bound(f);
    r.razborov = razborov_bound(f);
    r.fooling_log = fooling_set_bound(f.n(), f.l1()).log_size;
    auto lower = classify_and_private_lower(f);
    r.private_lower = lower.value;
    r.classification = lower.classification;
    r.regime = lower.regime;
    r.newman_bits = newman_budget(f.n(), f.l1());
    return r;
}
