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

#ifndef SYMCOMM_SRC_METERING_H
#define SYMCOMM_SRC_METERING_H

#include <cstddef>
#include <string_view>

#include "symcomm/cost_ledger.h"
#include "symcomm/random_tape.h"

namespace symcomm::detail {

/// Meters every bit drawn from a shared tape during its lifetime as shared randomness.
class SharedDraw {
   public:
    SharedDraw(RandomTape &tape, Channel &channel, std::string_view tag)
        : tape_(tape), channel_(channel), tag_(tag), start_(tape.bits_drawn()) {
    }
    SharedDraw(const SharedDraw &) = delete;
    SharedDraw &operator=(const SharedDraw &) = delete;
    ~SharedDraw() {
        if (tape_.is_shared()) {
            channel_.consume_shared(tape_.bits_drawn() - start_, tag_);
        }
    }

   private:
    RandomTape &tape_;
    Channel &channel_;
    std::string_view tag_;
    std::uint64_t start_;
};

/// Throws InputError for a coordinate outside [0, n). Kept out of line so hot callers stay small.
[[noreturn]] void throw_coordinate_out_of_range(std::size_t i);

}  // namespace symcomm::detail

#endif
