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

#ifndef SYMCOMM_INSTANCE_H
#define SYMCOMM_INSTANCE_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "symcomm/bit_string.h"
#include "symcomm/inner_function.h"
#include "symcomm/symmetric_spec.h"

namespace symcomm {

/// Input of a composed problem: Alice holds X_0..X_{n-1}, Bob holds Y_0..Y_{n-1}.
///
/// Coordinates can be excluded from play; an excluded coordinate counts as unmarked everywhere.
class Instance {
   public:
    Instance(std::shared_ptr<const InnerFunction> g, std::vector<std::uint32_t> x, std::vector<std::uint32_t> y);
    /// Single-bit AND instance: X_i = x_i, Y_i = y_i.
    static Instance and2(const BitString &x, const BitString &y);
    static Instance single_bit(std::shared_ptr<const InnerFunction> g, const BitString &x, const BitString &y);

    std::size_t size() const {
        return x_.size();
    }
    const InnerFunction &g() const {
        return *g_;
    }
    const std::shared_ptr<const InnerFunction> &g_ptr() const {
        return g_;
    }
    std::uint32_t alice_input(std::size_t i) const {
        return x_[i];
    }
    std::uint32_t bob_input(std::size_t i) const {
        return y_[i];
    }

    /// G(X_i, Y_i), ignoring exclusion.
    bool value(std::size_t i) const {
        return (*g_)(x_[i], y_[i]);
    }
    bool excluded(std::size_t i) const {
        return excluded_[i] != 0;
    }
    bool marked(std::size_t i) const {
        return !excluded(i) && value(i);
    }
    void exclude(std::size_t i);
    std::size_t excluded_count() const;

    /// M = {i not excluded : G(X_i, Y_i) = 1}. Reference oracle, not a protocol.
    std::vector<std::size_t> marked_set() const;
    std::size_t marked_count() const;

    /// Same inputs, inner function replaced by its negation (exclusions kept).
    Instance with_negated_g() const;

   private:
    std::shared_ptr<const InnerFunction> g_;
    std::vector<std::uint32_t> x_;
    std::vector<std::uint32_t> y_;
    std::vector<std::uint8_t> excluded_;
};

/// Ground truth f(G(X_0,Y_0), ..., G(X_{n-1},Y_{n-1})), all coordinates included.
bool eval_composed(const SymmetricSpec &f, const InnerFunction &g, std::span<const std::uint32_t> x, std::span<const std::uint32_t> y);
bool eval_composed(const SymmetricSpec &f, const Instance &instance);

}  // namespace symcomm

#endif
