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

#include "symcomm/sparse.h"

#include <algorithm>

#include "metering.h"
#include "symcomm/errors.h"

using namespace symcomm;

SparseConfig symcomm::make_sparse_config(std::size_t k, std::size_t k0) {
    if (k0 == 0) {
        throw InputError("k0 must be positive");
    }
    SparseConfig cfg;
    cfg.k = k;
    cfg.k0 = k0;
    cfg.k_eff = std::max(k, k0);
    cfg.buckets = 64 * cfg.k_eff;
    // ceil(ceil(v) / 6) = ceil(v / 6), so the integer log is exact here.
    cfg.passes = (ceil_log2(400ull * cfg.k_eff) + 5) / 6;
    cfg.c = (128ull * cfg.passes + 199) / 200 + 1;
    return cfg;
}

namespace {

// Multiply-shift hash of i into [0, buckets).
std::size_t bucket(std::uint64_t a, std::uint64_t b, std::size_t i, std::size_t buckets) {
    std::uint64_t h = a * static_cast<std::uint64_t>(i) + b;
    return static_cast<std::size_t>((static_cast<unsigned __int128>(h) * buckets) >> 64);
}

}  // namespace

SparseResult symcomm::sparse_intersect(const BitString &x, const BitString &y, const SparseConfig &config, RandomTape &tape, Channel &channel) {
    if (x.size() != y.size()) {
        throw InputError("sparse intersection inputs differ in length");
    }
    if (x.weight() > config.k || y.weight() > config.k) {
        throw InputError("sparse intersection input exceeds the sparsity bound");
    }
    SparseResult result;
    std::vector<std::size_t> sets[2] = {x.support(), y.support()};
    std::uint64_t spent = 0;
    std::vector<std::uint8_t> bitmap(config.buckets);
    for (unsigned msg = 0; msg < 2 * config.passes; msg++) {
        Party speaker = msg % 2 == 0 ? Party::alice : Party::bob;
        if (spent + config.buckets > config.threshold()) {
            result.aborted = true;
            return result;
        }
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        {
            detail::SharedDraw meter(tape, channel, phase::hash_seed);
            a = tape.draw_word(64) | 1;
            b = tape.draw_word(64);
        }
        auto &mine = sets[speaker == Party::alice ? 0 : 1];
        auto &theirs = sets[speaker == Party::alice ? 1 : 0];
        std::fill(bitmap.begin(), bitmap.end(), 0);
        for (auto i : mine) {
            bitmap[bucket(a, b, i, config.buckets)] = 1;
        }
        channel.send_bits(speaker, config.buckets, phase::bucket_filter);
        spent += config.buckets;
        std::erase_if(theirs, [&](std::size_t i) { return bitmap[bucket(a, b, i, config.buckets)] == 0; });
    }
    result.alice = std::move(sets[0]);
    result.bob = std::move(sets[1]);
    return result;
}

SparseResult symcomm::sparse_intersect(const BitString &x, const BitString &y, std::size_t k, RandomTape &tape, Channel &channel) {
    return sparse_intersect(x, y, make_sparse_config(k), tape, channel);
}
