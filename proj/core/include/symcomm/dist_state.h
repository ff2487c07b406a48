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

#ifndef SYMCOMM_DIST_STATE_H
#define SYMCOMM_DIST_STATE_H

#include <complex>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "symcomm/cost_ledger.h"
#include "symcomm/party.h"
#include "symcomm/random_tape.h"

namespace symcomm {

using Amplitude = std::complex<double>;

/// Handle to a register inside one DistState.
struct RegisterId {
    std::uint32_t id = 0;
    bool operator==(const RegisterId &) const = default;
};

/// Square row-major matrix.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Amplitude> entries;

    static DenseMatrix identity(std::size_t dim);
    Amplitude operator()(std::size_t r, std::size_t c) const {
        return entries[r * dim + c];
    }
};

/// Controlled XOR family: sum_c |c><c| (x) X^{masks[c]} on the concatenated targets.
///
/// Controls and targets are concatenated in list order, first register least significant.
/// `masks` has one entry per control value (a single entry when there are no controls).
struct XorFamily {
    std::vector<RegisterId> controls;
    std::vector<RegisterId> targets;
    std::vector<std::uint64_t> masks;
};

/// Controlled dense family: sum_c |c><c| (x) blocks[c] on the concatenated targets.
///
/// `blocks` has one entry per control value, or a single entry applied for every control value.
struct UnitaryFamily {
    std::vector<RegisterId> controls;
    std::vector<RegisterId> targets;
    std::vector<DenseMatrix> blocks;
};

using Gate = std::variant<XorFamily, UnitaryFamily>;

/// Dense statevector over registers owned by Alice or Bob.
///
/// Qubit q is bit q of the amplitude index; a register occupies a contiguous run of qubits and
/// its value is read least significant qubit first. Gates may only touch the acting party's
/// registers; moving a register to the other party is the only way to communicate.
class DistState {
   public:
    explicit DistState(unsigned qubit_limit = 20);

    /// Adds a register in basis state |init>. Throws CapacityError past the qubit limit.
    RegisterId alloc(Party owner, unsigned width, std::uint64_t init = 0);
    /// Same, with the initial value written as a bit string, first character = qubit 0.
    RegisterId alloc(Party owner, unsigned width, std::string_view init);
    /// Removes a register that is back in |0>, within 1e-7 in amplitude. Throws UsageError otherwise.
    void release(RegisterId reg);

    void apply(Party party, const Gate &gate);
    /// Hands the register to `to`, metering its width as simulated qubits.
    void send(RegisterId reg, Party to, Channel &channel, std::string_view tag);
    /// Born-rule measurement; collapses and renormalizes.
    std::uint64_t measure(RegisterId reg, RandomTape &tape);

    Party owner(RegisterId reg) const;
    unsigned width(RegisterId reg) const;
    unsigned offset(RegisterId reg) const;
    unsigned qubit_count() const {
        return qubits_;
    }
    unsigned qubit_limit() const {
        return limit_;
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }
    double norm() const;
    /// Marginal distribution of the register value.
    std::vector<double> probabilities(RegisterId reg) const;

   private:
    struct Info {
        unsigned offset = 0;
        unsigned width = 0;
        Party owner = Party::alice;
        bool live = false;
    };

    struct Field {
        unsigned offset;
        std::uint64_t mask;
        unsigned shift;
    };
    /// Concatenated register value extractor.
    struct Fields {
        boost::container::small_vector<Field, 4> parts;
        std::uint64_t gather(std::uint64_t index) const {
            std::uint64_t v = 0;
            for (const auto &p : parts) {
                v |= ((index >> p.offset) & p.mask) << p.shift;
            }
            return v;
        }
    };
    using Seen = boost::container::small_vector<RegisterId, 8>;

    const Info &info(RegisterId reg) const;
    /// Checks ownership and disjointness; returns the combined widths.
    unsigned check_registers(Party party, const std::vector<RegisterId> &regs, Seen &seen) const;
    Fields fields(const std::vector<RegisterId> &regs) const;
    std::uint64_t scatter_mask(const std::vector<RegisterId> &regs, std::uint64_t value) const;
    void apply_xor(Party party, const XorFamily &g);
    void apply_dense(Party party, const UnitaryFamily &g);

    unsigned limit_;
    unsigned qubits_ = 0;
    std::vector<Amplitude> amps_;
    std::vector<Info> regs_;
};

}  // namespace symcomm

#endif
