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

#ifndef SYMCOMM_ANALYSIS_H
#define SYMCOMM_ANALYSIS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcomm/bit_string.h"
#include "symcomm/symmetric_spec.h"

namespace symcomm {

/// Literal change-point scan over the spectrum table D(0..n).
///
/// l0 is the largest l in [1, n/2] with D(l) != D(l-1); l1 is the largest n-l over l in [n/2, n)
/// with D(l) != D(l+1). Either is 0 when no such l exists.
std::pair<std::size_t, std::size_t> compute_l0_l1(std::span<const std::uint8_t> table);

/// sqrt(n (l0 + l1)), the quantum query complexity class representative.
double query_bound(const SymmetricSpec &f);

/// sqrt(n l0) + l1.
double razborov_bound(const SymmetricSpec &f);

struct FoolingSetBound {
    /// C(n, l1 - 1), exact for n <= 64 and absent above that. Zero when l1 = 0.
    std::optional<boost::multiprecision::cpp_int> size;
    /// log2 of the size (0 when undefined). Above n = 64 computed through lgamma, relative error < 1e-9.
    double log_size = 0;
    /// log2(log_size), the quantum lower bound obtained from the deterministic one (0 when log_size <= 1).
    double log_log_size = 0;
};

FoolingSetBound fooling_set_bound(std::size_t n, std::size_t l1);

/// All x in {0,1}^n with |not x| = l1 - 1; the fooling set is {(x, x)}.
std::vector<BitString> enumerate_fooling_set(std::size_t n, std::size_t l1);

/// Exhaustively checks f o AND on the fooling set: every diagonal pair gives 1, every cross pair 0.
bool check_fooling_property(const SymmetricSpec &f, std::span<const BitString> set);

enum class Classification : std::uint8_t { constant, and_like, negand_like, general };

/// Which branch of the private-coin lower bound applied.
enum class LowerRegime : std::uint8_t { none, theta_one, l0_positive, l0_zero };

std::string_view to_string(Classification c);
std::string_view to_string(LowerRegime r);

struct PrivateLower {
    Classification classification = Classification::constant;
    LowerRegime regime = LowerRegime::none;
    /// sqrt(n l0) + l1 + log2 log2 n for the general case, 0 otherwise.
    double value = 0;
};

/// AND-like / negAND-like means the table is exactly AND_n or its negation; those are the only
/// non-constant tables whose composed function is Theta(1).
PrivateLower classify_and_private_lower(const SymmetricSpec &f);

/// ceil(log2(l1 + 1)) + ceil(log2 log2(n + 1)), computed in integers.
unsigned newman_budget(std::size_t n, std::size_t l1);

struct AnalysisReport {
    std::size_t n = 0;
    std::size_t l0 = 0;
    std::size_t l1 = 0;
    double query_bound = 0;
    double razborov = 0;
    double fooling_log = 0;
    double private_lower = 0;
    Classification classification = Classification::constant;
    LowerRegime regime = LowerRegime::none;
    unsigned newman_bits = 0;
};

AnalysisReport analyze(const SymmetricSpec &f);

}  // namespace symcomm

#endif
