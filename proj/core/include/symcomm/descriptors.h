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

#ifndef SYMCOMM_DESCRIPTORS_H
#define SYMCOMM_DESCRIPTORS_H

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "symcomm/inner_function.h"
#include "symcomm/symmetric_spec.h"

namespace symcomm {

/// Parses `or | and | parity | thr:<t> | table:<n+1 bits>`.
///
/// The named families need `n`. For `table:` the arity comes from the table; if `n` is also
/// given it must agree.
SymmetricSpec parse_outer(std::string_view descriptor, std::optional<std::size_t> n);

/// Parses `and2 | xor2 | tt:<j>:<k>:<hex>`.
///
/// The hex string is read as an integer whose bit t (least significant = bit 0) is G(a, b) for
/// t = a * 2^k + b. So `tt:1:1:8` is AND and `tt:1:1:6` is XOR. Exactly ceil(2^(j+k) / 4) hex digits.
std::shared_ptr<const InnerFunction> parse_inner(std::string_view descriptor);

/// Inverse of the tt: hex encoding.
std::string truth_table_hex(const InnerFunction &g);

}  // namespace symcomm

#endif
