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

#ifndef SYMCOMM_TOOLS_ACCEPTANCE_H
#define SYMCOMM_TOOLS_ACCEPTANCE_H

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace symcomm::tools {

enum class Suite { fast, full };

struct AcceptanceOptions {
    /// fast runs every check at reduced trial counts; full runs the stated counts.
    Suite suite = Suite::full;
    std::uint64_t seed = 1;
    /// Mutation hook: accept search candidates without the classical verification step.
    bool skip_verification = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    nlohmann::json measured;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

/// Runs the requested criteria (1..10) in ascending order, calling `on_result` after each.
/// Criterion 10 audits every ledger produced in this call; if none of 1..9 were requested it
/// first runs them at fast scale without reporting them.
std::vector<CriterionResult> run_acceptance(std::span<const int> ids,
                                            const AcceptanceOptions &options,
                                            const std::function<void(const CriterionResult &)> &on_result = {});

/// One line: "criterion N PASS|FAIL title: detail (seconds)".
std::string format_line(const CriterionResult &result);

nlohmann::json summary_json(std::span<const CriterionResult> results, const AcceptanceOptions &options);

}  // namespace symcomm::tools

#endif
