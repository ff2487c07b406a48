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

#include "workloads.h"

#include <algorithm>
#include <charconv>

#include "symcomm/errors.h"

using namespace symcomm;
using namespace symcomm::tools;

Preimages tools::preimages(const InnerFunction &g) {
    Preimages p;
    for (std::uint32_t a = 0; a < (1u << g.alice_width()); a++) {
        for (std::uint32_t b = 0; b < (1u << g.bob_width()); b++) {
            (g(a, b) ? p.one : p.zero).emplace_back(a, b);
        }
    }
    return p;
}

Instance tools::realize(const std::shared_ptr<const InnerFunction> &g, const Preimages &pre, const BitString &z, Rng &rng) {
    std::vector<std::uint32_t> x(z.size()), y(z.size());
    for (std::size_t i = 0; i < z.size(); i++) {
        const auto &pool = z[i] ? pre.one : pre.zero;
        if (pool.empty()) {
            throw InputError("inner function " + g->name() + " never takes the value " + std::to_string(int{z[i]}));
        }
        auto [a, b] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        x[i] = a;
        y[i] = b;
    }
    return Instance(g, std::move(x), std::move(y));
}

std::vector<std::size_t> tools::random_subset(std::size_t n, std::size_t k, Rng &rng) {
    if (k > n) {
        throw InputError("subset larger than the universe");
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; i++) {
        all[i] = i;
    }
    // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
    for (std::size_t i = 0; i < k; i++) {
        std::size_t j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
        std::swap(all[i], all[j]);
    }
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Instance> tools::all_unmarked_instances(const std::shared_ptr<const InnerFunction> &g, std::size_t n) {
    auto zero = preimages(*g).zero;
    std::size_t base = zero.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; i++) {
        total *= base;
    }
    std::vector<Instance> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; code++) {
        std::vector<std::uint32_t> x(n), y(n);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; i++) {
            std::tie(x[i], y[i]) = zero[c % base];
            c /= base;
        }
        out.emplace_back(g, std::move(x), std::move(y));
    }
    return out;
}

std::pair<BitString, BitString> tools::sparse_pair(std::size_t n, std::size_t k, Rng &rng) {
    if (2 * k > n) {
        throw InputError("sparse pairs need n >= 2k");
    }
    auto xs = random_subset(n, k, rng);
    std::size_t shared = std::uniform_int_distribution<std::size_t>(0, k)(rng);
    BitString x = BitString::from_support(n, xs);
    std::vector<std::size_t> ys(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(shared));
    while (ys.size() < k) {
        std::size_t c = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        if (!x[c] && std::find(ys.begin(), ys.end(), c) == ys.end()) {
            ys.push_back(c);
        }
    }
    return {x, BitString::from_support(n, ys)};
}

std::vector<std::size_t> tools::parse_size_list(const std::string &text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
        if (ec != std::errc{} || ptr != text.data() + end || end == pos) {
            throw InputError("expected a comma-separated list of integers, got '" + text + "'");
        }
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}
