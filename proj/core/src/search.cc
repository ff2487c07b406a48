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

#include "symcomm/search.h"

#include <cmath>
#include <optional>
#include <string>

#include "metering.h"
#include "symcomm/dist_state.h"
#include "symcomm/errors.h"
#include "symcomm/oracle.h"

using namespace symcomm;

namespace {

// Householder reflection taking |0> to the uniform superposition over the first `count` basis states.
DenseMatrix uniform_prep(std::size_t dim, std::size_t count) {
    std::vector<double> v(dim, 0.0);
    double amp = 1.0 / std::sqrt(static_cast<double>(count));
    for (std::size_t k = 0; k < count; k++) {
        v[k] = -amp;
    }
    v[0] += 1.0;
    double vv = 0;
    for (double x : v) {
        vv += x * x;
    }
    DenseMatrix m = DenseMatrix::identity(dim);
    if (vv < 1e-15) {
        return m;
    }
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            m.entries[r * dim + c] -= 2.0 * v[r] * v[c] / vv;
        }
    }
    return m;
}

// 2|u><u| - I with u uniform over the first `count` basis states.
DenseMatrix diffusion(std::size_t dim, std::size_t count) {
    DenseMatrix m{dim, std::vector<Amplitude>(dim * dim)};
    double two_over = 2.0 / static_cast<double>(count);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            double u = (r < count && c < count) ? two_over : 0.0;
            m.entries[r * dim + c] = u - (r == c ? 1.0 : 0.0);
        }
    }
    return m;
}

DenseMatrix minus_prep() {
    double h = 1.0 / std::sqrt(2.0);
    return DenseMatrix{2, {h, h, -h, h}};
}

class GroverRunner {
   public:
    GroverRunner(const Instance &instance, std::span<const std::size_t> positions, const SearchOptions &options)
        : instance_(instance), positions_(positions), options_(options) {
        if (options.mode == CostMode::sim) {
            w_ = index_width(positions.size());
            prep_ = uniform_prep(std::size_t{1} << w_, positions.size());
            diff_ = diffusion(std::size_t{1} << w_, positions.size());
            oracle_.emplace(instance, positions, w_);
        } else {
            for (auto p : positions) {
                marked_count_ += instance.marked(p);
            }
        }
    }

    // Runs r Grover iterations and measures the index; returns a position in [0, N).
    std::size_t run(std::uint64_t r, RandomTape &alice, Channel &channel) {
        return options_.mode == CostMode::sim ? run_sim(r, alice, channel) : run_ledger(r, alice, channel);
    }

   private:
    std::size_t run_sim(std::uint64_t r, RandomTape &alice, Channel &channel) {
        DistState state(options_.qubit_limit);
        RegisterId index = state.alloc(Party::alice, w_);
        RegisterId target = state.alloc(Party::alice, 1);
        state.apply(Party::alice, UnitaryFamily{{}, {index}, {prep_}});
        state.apply(Party::alice, UnitaryFamily{{}, {target}, {minus_prep()}});
        for (std::uint64_t it = 0; it < r; it++) {
            oracle_->apply(state, index, target, channel);
            state.apply(Party::alice, UnitaryFamily{{}, {index}, {diff_}});
            channel.claim_qubits(1, phase::sync_claimed);
        }
        std::uint64_t i = state.measure(index, alice);
        return std::min<std::size_t>(i, positions_.size() - 1);
    }

    std::size_t run_ledger(std::uint64_t r, RandomTape &alice, Channel &channel) {
        if (channel.keeps_transcript()) {
            for (std::uint64_t it = 0; it < r; it++) {
                claim_oracle_query(instance_, channel);
                channel.claim_qubits(1, phase::sync_claimed);
            }
        } else {
            // Same totals as the per-iteration claims without the per-event bookkeeping.
            channel.claim_qubits(r * 2 * instance_.g().qcc_e(), phase::query_claimed);
            channel.claim_qubits(r, phase::sync_claimed);
        }
        double n = static_cast<double>(positions_.size());
        std::size_t total = positions_.size();
        if (marked_count_ == 0) {
            return alice.uniform(total);
        }
        bool hit = marked_count_ == total;
        if (marked_count_ != 0 && marked_count_ != total) {
            double theta = std::asin(std::sqrt(static_cast<double>(marked_count_) / n));
            double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * theta);
            hit = alice.uniform_real() < s * s;
        }
        // Uniform over the chosen class: take its pick-th member.
        std::uint64_t pick = alice.uniform(hit ? marked_count_ : total - marked_count_);
        for (std::size_t i = 0; i < total; i++) {
            if (instance_.marked(positions_[i]) == hit && pick-- == 0) {
                return i;
            }
        }
        throw UsageError("marked count changed during a run");
    }

    const Instance &instance_;
    std::span<const std::size_t> positions_;
    const SearchOptions &options_;
    unsigned w_ = 0;
    DenseMatrix prep_;
    DenseMatrix diff_;
    std::optional<OracleCircuit> oracle_;
    std::size_t marked_count_ = 0;
};

}  // namespace

namespace {

// Appends one uniformly chosen coordinate per block of `gamma` consecutive coordinates.
void fill_sample_map(std::size_t n, std::size_t gamma, RandomTape &shared, Channel &channel, std::vector<std::size_t> &chosen) {
    if (gamma < 1 || gamma > n) {
        throw InputError("block size must lie in [1, n]");
    }
    detail::SharedDraw meter(shared, channel, phase::sample_map);
    chosen.clear();
    for (std::size_t start = 0; start < n; start += gamma) {
        std::size_t len = std::min(gamma, n - start);
        chosen.push_back(start + shared.uniform(len));
    }
}

}  // namespace

SampleMap symcomm::draw_sample_map(std::size_t n, std::size_t gamma, RandomTape &shared, Channel &channel) {
    SampleMap map{gamma, {}};
    if (gamma >= 1) {
        map.chosen.reserve((n + gamma - 1) / gamma);
    }
    fill_sample_map(n, gamma, shared, channel, map.chosen);
    return map;
}

bool symcomm::verify_candidate(const Instance &instance, std::size_t i, Channel &channel) {
    if (i >= instance.size()) {
        detail::throw_coordinate_out_of_range(i);
    }
    if (instance.excluded(i)) {
        return false;
    }
    return classical_eval_g(instance, i, channel, phase::verify);
}

FindResult symcomm::find_one_on(const Instance &instance,
                                std::span<const std::size_t> positions,
                                RandomTape &shared,
                                Channel &channel,
                                const SearchOptions &options) {
    if (positions.empty()) {
        return FindResult::none();
    }
    // Separate streams keep the iteration schedule independent of how outcomes are sampled.
    RandomTape alice = shared.split(TapeKind::alice_private);
    RandomTape outcomes = shared.split(TapeKind::alice_private);
    GroverRunner runner(instance, positions, options);
    double root = std::sqrt(static_cast<double>(positions.size()));
    auto budget = static_cast<std::uint64_t>(std::ceil(options.budget_factor * root));
    auto m_cap = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(root)));
    std::uint64_t m = 1;
    std::uint64_t used = 0;
    while (true) {
        std::uint64_t r = alice.uniform(m);
        // r oracle calls plus one verification per attempt.
        if (used + r + 1 > budget) {
            break;
        }
        used += r + 1;
        std::size_t candidate = positions[runner.run(r, outcomes, channel)];
        if (!options.verify_candidates || verify_candidate(instance, candidate, channel)) {
            return FindResult::found(candidate);
        }
        m = std::min<std::uint64_t>((9 * m + 7) / 8, m_cap);
    }
    return FindResult::none();
}

FindResult symcomm::find_one(const Instance &instance, RandomTape &shared, Channel &channel, const SearchOptions &options) {
    if (instance.size() == 0) {
        throw InputError("find_one needs n >= 1");
    }
    std::vector<std::size_t> all(instance.size());
    for (std::size_t i = 0; i < all.size(); i++) {
        all[i] = i;
    }
    return find_one_on(instance, all, shared, channel, options);
}

FindResult symcomm::find_exact(const Instance &instance, std::size_t gamma, RandomTape &shared, Channel &channel, const SearchOptions &options) {
    if (gamma < 1 || gamma > instance.size()) {
        throw InputError("find_exact needs 1 <= gamma <= n");
    }
    std::vector<std::size_t> chosen;
    chosen.reserve((instance.size() + gamma - 1) / gamma);
    for (unsigned round = 0; round < options.exact_rounds; round++) {
        fill_sample_map(instance.size(), gamma, shared, channel, chosen);
        FindResult r = find_one_on(instance, chosen, shared, channel, options);
        if (r.is_found()) {
            return r;
        }
    }
    return FindResult::none();
}

FindResult symcomm::find_more(const Instance &instance, std::size_t k, RandomTape &shared, Channel &channel, const SearchOptions &options) {
    std::size_t n = instance.size();
    if (k < 1 || k > n) {
        throw InputError("find_more needs 1 <= k <= n");
    }
    for (std::size_t gamma = k; gamma <= n; gamma *= 2) {
        FindResult r = find_exact(instance, gamma, shared, channel, options);
        if (r.is_found()) {
            return r;
        }
    }
    for (unsigned t = 0; t < options.random_checks; t++) {
        std::size_t i = 0;
        {
            detail::SharedDraw meter(shared, channel, phase::random_check);
            i = shared.uniform(n);
        }
        if (!options.verify_candidates || verify_candidate(instance, i, channel)) {
            return FindResult::found(i);
        }
    }
    return FindResult::none();
}

boost::multiprecision::cpp_rational symcomm::single_hit_probability(std::size_t n, std::size_t gamma, std::span<const std::size_t> marked) {
    using boost::multiprecision::cpp_rational;
    if (gamma < 1 || gamma > n) {
        throw InputError("block size must lie in [1, n]");
    }
    std::size_t blocks = (n + gamma - 1) / gamma;
    std::vector<std::size_t> count(blocks, 0);
    for (auto i : marked) {
        if (i >= n) {
            throw InputError("marked coordinate out of range");
        }
        count[i / gamma]++;
    }
    // Per block: probability of missing every marked element, and of hitting one.
    cpp_rational none_so_far = 1;
    cpp_rational one_so_far = 0;
    for (std::size_t b = 0; b < blocks; b++) {
        std::size_t len = std::min(gamma, n - b * gamma);
        cpp_rational hit(static_cast<long long>(count[b]), static_cast<long long>(len));
        cpp_rational miss = 1 - hit;
        one_so_far = one_so_far * miss + none_so_far * hit;
        none_so_far *= miss;
    }
    return one_so_far;
}
