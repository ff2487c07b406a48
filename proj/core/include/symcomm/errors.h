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

#ifndef SYMCOMM_ERRORS_H
#define SYMCOMM_ERRORS_H

#include <stdexcept>

namespace symcomm {

/// Malformed or inconsistent caller input (arity mismatch, bad descriptor, out-of-range parameter).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A party tried to act on a register it does not own.
struct LocalityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An operation that is well-formed but meaningless in the current state (e.g. sending a register to its owner).
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

/// The dense simulator would exceed its qubit ceiling.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// splitD was asked to split a constant table.
struct DegenerateSplitError : InputError {
    using InputError::InputError;
};

}  // namespace symcomm

#endif
