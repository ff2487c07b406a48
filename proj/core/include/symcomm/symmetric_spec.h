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

#ifndef SYMCOMM_SYMMETRIC_SPEC_H
#define SYMCOMM_SYMMETRIC_SPEC_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symcomm/bit_string.h"

namespace symcomm {

/// A symmetric outer function f(x) = D(|x|), stored as its spectrum table D(0..n).
class SymmetricSpec {
   public:
    /// Table entries must be 0 or 1 and there must be at least one entry (n = table.size() - 1).
    static SymmetricSpec from_table(std::vector<std::uint8_t> table);

    std::size_t n() const {
        return table_.size() - 1;
    }
    bool value(std::size_t weight) const {
        return table_.at(weight) != 0;
    }
    bool operator()(const BitString &x) const;
    const std::vector<std::uint8_t> &table() const {
        return table_;
    }

    std::size_t l0() const {
        return l0_;
    }
    std::size_t l1() const {
        return l1_;
    }
    bool is_constant() const;
    SymmetricSpec negated() const;

    /// Weight interval [lo, hi] on which D is constant.
    ///
    /// Normally (l0, n - l1). For odd n a change between weights (n-1)/2 and (n+1)/2 is invisible
    /// to both l0 and l1; in that case lo is raised to (n+1)/2 so the interval really is constant.
    std::pair<std::size_t, std::size_t> constant_region() const;

    bool operator==(const SymmetricSpec &other) const = default;

   private:
    explicit SymmetricSpec(std::vector<std::uint8_t> table);

    std::vector<std::uint8_t> table_;
    std::size_t l0_ = 0;
    std::size_t l1_ = 0;
};

}  // namespace symcomm

#endif
