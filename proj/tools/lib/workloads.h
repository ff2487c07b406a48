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

#ifndef SYMCOMM_TOOLS_WORKLOADS_H
#define SYMCOMM_TOOLS_WORKLOADS_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symcomm/bit_string.h"
#include "symcomm/cost_ledger.h"
#include "symcomm/inner_function.h"
#include "symcomm/instance.h"

namespace symcomm::tools {

using Rng = std::mt19937_64;

/// Inputs (a, b) of G grouped by the value G(a, b).
struct Preimages {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> zero;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> one;
};

Preimages preimages(const InnerFunction &g);

/// An instance whose G-values are `z`, each coordinate's inputs drawn uniformly from the
/// matching preimage class. Throws InputError if a needed class is empty.
Instance realize(const std::shared_ptr<const InnerFunction> &g, const Preimages &pre, const BitString &z, Rng &rng);

/// Uniform random subset of [0, n) of size k, ascending.
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, Rng &rng);

/// Every (x, y) with G(x_i, y_i) = 0 for all i, in a fixed order. Used for small n only.
std::vector<Instance> all_unmarked_instances(const std::shared_ptr<const InnerFunction> &g, std::size_t n);

/// Pair of subsets of [0, n) of size k sharing a uniformly chosen number of elements.
std::pair<BitString, BitString> sparse_pair(std::size_t n, std::size_t k, Rng &rng);

/// Counts ledgers and the EPR pairs they report; every protocol run in the harness goes through one.
class LedgerAudit {
   public:
    void add(const CostLedger &ledger) {
        ledgers_++;
        epr_pairs_ += ledger.epr_pairs;
    }
    void merge(const LedgerAudit &other) {
        ledgers_ += other.ledgers_;
        epr_pairs_ += other.epr_pairs_;
    }
    std::uint64_t ledgers() const {
        return ledgers_;
    }
    std::uint64_t epr_pairs() const {
        return epr_pairs_;
    }

   private:
    std::uint64_t ledgers_ = 0;
    std::uint64_t epr_pairs_ = 0;
};

/// Parses comma-separated unsigned integers, for example "64,128,256".
std::vector<std::size_t> parse_size_list(const std::string &text);

}  // namespace symcomm::tools

#endif
