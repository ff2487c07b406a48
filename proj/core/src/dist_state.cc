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

#include "symcomm/dist_state.h"

#include <cmath>
#include <string>

#include "symcomm/errors.h"

using namespace symcomm;

namespace {

constexpr double kNormTolerance = 1e-9;
constexpr double kZeroTolerance = 1e-7;

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m{dim, std::vector<Amplitude>(dim * dim)};
    for (std::size_t i = 0; i < dim; i++) {
        m.entries[i * dim + i] = 1.0;
    }
    return m;
}

DistState::DistState(unsigned qubit_limit) : limit_(qubit_limit), amps_(1, Amplitude(1.0)) {
    if (qubit_limit > 30) {
        throw InputError("qubit limit above 30 is not supported by the dense simulator");
    }
}

RegisterId DistState::alloc(Party owner, unsigned width, std::uint64_t init) {
    if (width == 0) {
        throw InputError("register width must be at least 1");
    }
    if (qubits_ + width > limit_) {
        throw CapacityError("allocating " + std::to_string(width) + " qubits would exceed the limit of " + std::to_string(limit_));
    }
    if (width < 64 && (init >> width) != 0) {
        throw InputError("initial value does not fit the register width");
    }
    // New qubits are the most significant ones, so the old block moves up by init << qubits_.
    std::size_t old = amps_.size();
    amps_.resize(old << width);
    std::uint64_t shift = init << qubits_;
    if (shift != 0) {
        for (std::size_t i = old; i-- > 0;) {
            amps_[i | shift] = amps_[i];
            amps_[i] = 0;
        }
    }
    regs_.push_back(Info{qubits_, width, owner, true});
    qubits_ += width;
    return RegisterId{static_cast<std::uint32_t>(regs_.size() - 1)};
}

RegisterId DistState::alloc(Party owner, unsigned width, std::string_view init) {
    if (init.size() != width) {
        throw InputError("initial basis string has the wrong length");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < init.size(); i++) {
        if (init[i] != '0' && init[i] != '1') {
            throw InputError("initial basis string must contain only 0/1");
        }
        v |= static_cast<std::uint64_t>(init[i] == '1') << i;
    }
    return alloc(owner, width, v);
}

const DistState::Info &DistState::info(RegisterId reg) const {
    if (reg.id >= regs_.size() || !regs_[reg.id].live) {
        throw InputError("unknown or released register");
    }
    return regs_[reg.id];
}

Party DistState::owner(RegisterId reg) const {
    return info(reg).owner;
}

unsigned DistState::width(RegisterId reg) const {
    return info(reg).width;
}

unsigned DistState::offset(RegisterId reg) const {
    return info(reg).offset;
}

void DistState::release(RegisterId reg) {
    Info r = info(reg);
    std::uint64_t field = ((std::uint64_t{1} << r.width) - 1) << r.offset;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if ((i & field) != 0 && std::norm(amps_[i]) > kZeroTolerance * kZeroTolerance) {
            throw UsageError("released register is not in |0>");
        }
    }
    // In-place compaction: the source index is never below the destination.
    std::uint64_t low = (std::uint64_t{1} << r.offset) - 1;
    std::size_t kept = amps_.size() >> r.width;
    for (std::size_t j = 0; j < kept; j++) {
        std::size_t i = (j & low) | ((j & ~low) << r.width);
        amps_[j] = amps_[i];
    }
    amps_.resize(kept);
    qubits_ -= r.width;
    regs_[reg.id].live = false;
    for (auto &other : regs_) {
        if (other.live && other.offset > r.offset) {
            other.offset -= r.width;
        }
    }
}

unsigned DistState::check_registers(Party party, const std::vector<RegisterId> &regs, Seen &seen) const {
    unsigned total = 0;
    for (auto reg : regs) {
        const Info &r = info(reg);
        if (r.owner != party) {
            throw LocalityError(std::string(to_string(party)) + " cannot act on a register owned by " + std::string(to_string(r.owner)));
        }
        for (auto s : seen) {
            if (s == reg) {
                throw InputError("a register appears twice in one gate");
            }
        }
        seen.push_back(reg);
        total += r.width;
    }
    return total;
}

DistState::Fields DistState::fields(const std::vector<RegisterId> &regs) const {
    Fields f;
    unsigned shift = 0;
    for (auto reg : regs) {
        const Info &r = regs_[reg.id];
        f.parts.push_back(Field{r.offset, (std::uint64_t{1} << r.width) - 1, shift});
        shift += r.width;
    }
    return f;
}



std::uint64_t DistState::scatter_mask(const std::vector<RegisterId> &regs, std::uint64_t value) const {
    std::uint64_t out = 0;
    for (auto reg : regs) {
        const Info &r = regs_[reg.id];
        out |= (value & ((std::uint64_t{1} << r.width) - 1)) << r.offset;
        value >>= r.width;
    }
    return out;
}

void DistState::apply(Party party, const Gate &gate) {
    if (const auto *x = std::get_if<XorFamily>(&gate)) {
        apply_xor(party, *x);
    } else {
        apply_dense(party, std::get<UnitaryFamily>(gate));
    }
}

void DistState::apply_xor(Party party, const XorFamily &g) {
    Seen seen;
    unsigned cw = check_registers(party, g.controls, seen);
    unsigned tw = check_registers(party, g.targets, seen);
    if (g.masks.size() != (std::size_t{1} << cw)) {
        throw InputError("XOR family needs one mask per control value");
    }
    std::vector<std::uint64_t> spread(g.masks.size());
    for (std::size_t c = 0; c < g.masks.size(); c++) {
        if (tw < 64 && (g.masks[c] >> tw) != 0) {
            throw InputError("XOR mask wider than the target registers");
        }
        spread[c] = scatter_mask(g.targets, g.masks[c]);
    }
    // Controls are untouched, so the permutation is a product of disjoint swaps.
    Fields ctrl = fields(g.controls);
    auto sweep = [&](auto control_of) {
        for (std::size_t i = 0; i < amps_.size(); i++) {
            std::size_t j = i ^ spread[control_of(i)];
            if (j > i) {
                std::swap(amps_[i], amps_[j]);
            }
        }
    };
    if (ctrl.parts.size() == 1) {
        const Field f = ctrl.parts[0];
        sweep([f](std::uint64_t i) { return (i >> f.offset) & f.mask; });
    } else {
        sweep([&ctrl](std::uint64_t i) { return ctrl.gather(i); });
    }
}

void DistState::apply_dense(Party party, const UnitaryFamily &g) {
    Seen seen;
    unsigned cw = check_registers(party, g.controls, seen);
    unsigned tw = check_registers(party, g.targets, seen);
    std::size_t dim = std::size_t{1} << tw;
    std::size_t ncontrol = std::size_t{1} << cw;
    if (g.blocks.size() != ncontrol && g.blocks.size() != 1) {
        throw InputError("unitary family needs one block per control value, or a single block");
    }
    for (const auto &b : g.blocks) {
        if (b.dim != dim || b.entries.size() != dim * dim) {
            throw InputError("unitary block dimension does not match the target width");
        }
    }
    std::vector<std::uint64_t> offsets(dim);
    std::uint64_t field = 0;
    for (std::size_t t = 0; t < dim; t++) {
        offsets[t] = scatter_mask(g.targets, t);
        field |= offsets[t];
    }
    Fields ctrl = fields(g.controls);
    std::vector<Amplitude> in(dim), out(dim);
    for (std::size_t base = 0; base < amps_.size(); base++) {
        if ((base & field) != 0) {
            continue;
        }
        const DenseMatrix &m = g.blocks.size() == 1 ? g.blocks[0] : g.blocks[ctrl.gather(base)];
        for (std::size_t t = 0; t < dim; t++) {
            in[t] = amps_[base | offsets[t]];
        }
        for (std::size_t r = 0; r < dim; r++) {
            Amplitude acc = 0;
            const Amplitude *row = &m.entries[r * dim];
            for (std::size_t c = 0; c < dim; c++) {
                acc += row[c] * in[c];
            }
            out[r] = acc;
        }
        for (std::size_t t = 0; t < dim; t++) {
            amps_[base | offsets[t]] = out[t];
        }
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw InputError("gate is not unitary: norm drifted to " + std::to_string(norm()));
    }
}

void DistState::send(RegisterId reg, Party to, Channel &channel, std::string_view tag) {
    info(reg);
    Info &r = regs_[reg.id];
    if (r.owner == to) {
        throw UsageError("register is already owned by " + std::string(to_string(to)));
    }
    channel.send_qubits(r.owner, r.width, tag);
    r.owner = to;
}

std::uint64_t DistState::measure(RegisterId reg, RandomTape &tape) {
    const Info r = info(reg);
    auto probs = probabilities(reg);
    double u = tape.uniform_real();
    std::uint64_t outcome = probs.size() - 1;
    double acc = 0;
    for (std::size_t v = 0; v < probs.size(); v++) {
        acc += probs[v];
        if (u < acc) {
            outcome = v;
            break;
        }
    }
    // Guard against landing on a zero-probability tail value through rounding.
    while (probs[outcome] == 0 && outcome > 0) {
        outcome--;
    }
    std::uint64_t mask = (std::uint64_t{1} << r.width) - 1;
    double scale = 1.0 / std::sqrt(probs[outcome]);
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (((i >> r.offset) & mask) == outcome) {
            amps_[i] *= scale;
        } else {
            amps_[i] = 0;
        }
    }
    return outcome;
}

double DistState::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::vector<double> DistState::probabilities(RegisterId reg) const {
    const Info &r = info(reg);
    std::vector<double> p(std::size_t{1} << r.width, 0.0);
    std::uint64_t mask = (std::uint64_t{1} << r.width) - 1;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        p[(i >> r.offset) & mask] += std::norm(amps_[i]);
    }
    return p;
}
