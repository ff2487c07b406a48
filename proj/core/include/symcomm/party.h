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

#ifndef SYMCOMM_PARTY_H
#define SYMCOMM_PARTY_H

#include <cstdint>
#include <string_view>

namespace symcomm {

enum class Party : std::uint8_t { alice, bob };

constexpr Party other(Party p) {
    return p == Party::alice ? Party::bob : Party::alice;
}

constexpr std::string_view to_string(Party p) {
    return p == Party::alice ? "alice" : "bob";
}

}  // namespace symcomm

#endif
