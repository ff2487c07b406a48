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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all requested pass.

#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.h"

using namespace symcomm::tools;

int main(int argc, char **argv) {
    CLI::App app{"symcomm acceptance criteria"};
    std::vector<int> only;
    std::string suite = "full";
    AcceptanceOptions options;
    app.add_option("--only", only, "Criterion numbers to run (default: all)")->check(CLI::Range(1, kCriterionCount));
    app.add_option("--suite", suite, "fast | full")->check(CLI::IsMember({"fast", "full"}));
    app.add_option("--seed", options.seed, "Base seed");
    app.add_flag("--skip-verification", options.skip_verification, "Mutation check: accept search candidates unverified");
    CLI11_PARSE(app, argc, argv);
    options.suite = suite == "fast" ? Suite::fast : Suite::full;
    if (only.empty()) {
        for (int id = 1; id <= kCriterionCount; id++) {
            only.push_back(id);
        }
    }
    bool all = true;
    run_acceptance(only, options, [&](const CriterionResult &r) {
        std::cout << format_line(r) << std::endl;
        all = all && r.passed;
    });
    return all ? 0 : 1;
}
