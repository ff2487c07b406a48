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

#ifndef SYMCOMM_TOOLS_COMMANDS_H
#define SYMCOMM_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace symcomm::tools {

/// Process exit codes of the command line tool.
enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailure = 2, kCapacityError = 3 };

/// Every flag of every subcommand; the JSON config file uses the same keys.
struct Settings {
    std::uint64_t seed = 1;
    std::string mode = "ledger";
    std::string out;
    std::string f;
    std::string g = "and2";
    std::optional<std::size_t> n;
    std::string x;
    std::string y;
    std::optional<std::size_t> k;
    std::optional<std::size_t> gamma;
    std::string model = "shared";
    std::string n_list;
    std::string k_list = "1";
    std::size_t trials = 1;
    std::string only;
    std::string json_out;
    bool wallclock = true;
    /// Mutation switch for the verify command: disables the search verification gate.
    bool skip_verification = false;
};

/// Applies a flat JSON object of settings (keys as in the long flags, dashes or underscores).
/// Unknown keys and wrongly typed values throw InputError.
void apply_config(Settings &settings, const nlohmann::json &config);

nlohmann::json cmd_analyze(const Settings &settings);

/// One protocol execution. The report's "match" says whether the outcome agrees with the
/// reference evaluation.
nlohmann::json cmd_run(const std::string &protocol, const Settings &settings);

/// Writes the sweep CSV to `out`; returns the number of rows.
std::size_t cmd_sweep(const std::string &protocol, const Settings &settings, std::ostream &out);

/// CSV header of sweep output.
std::string sweep_header();

/// Runs the acceptance suite, printing one line per criterion to `log`. Returns kOk iff all pass.
int cmd_verify(const std::string &suite, const Settings &settings, std::ostream &log);

/// Whole command line: parses, dispatches, maps errors to exit codes.
int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace symcomm::tools

#endif
