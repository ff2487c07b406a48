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

#include "symcomm/instance.h"

#include <algorithm>

#include "symcomm/errors.h"

using namespace symcomm;

Instance::Instance(std::shared_ptr<const InnerFunction> g, std::vector<std::uint32_t> x, std::vector<std::uint32_t> y)
    : g_(std::move(g)), x_(std::move(x)), y_(std::move(y)), excluded_(x_.size(), 0) {
    if (!g_) {
        throw InputError("instance needs an inner function");
    }
    if (x_.size() != y_.size()) {
        throw InputError("Alice and Bob must hold the same number of coordinates");
    }
    for (std::size_t i = 0; i < x_.size(); i++) {
        if ((x_[i] >> g_->alice_width()) != 0 || (y_[i] >> g_->bob_width()) != 0) {
            throw InputError("coordinate " + std::to_string(i) + " does not fit the inner function widths");
        }
    }
}

Instance Instance::single_bit(std::shared_ptr<const InnerFunction> g, const BitString &x, const BitString &y) {
    if (x.size() != y.size()) {
        throw InputError("x and y differ in length");
    }
    std::vector<std::uint32_t> xs(x.size());
    std::vector<std::uint32_t> ys(y.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        xs[i] = x[i];
        ys[i] = y[i];
    }
    return Instance(std::move(g), std::move(xs), std::move(ys));
}

Instance Instance::and2(const BitString &x, const BitString &y) {
    static const auto g = std::make_shared<const InnerFunction>(InnerFunction::and2());
    return single_bit(g, x, y);
}

void Instance::exclude(std::size_t i) {
    if (i >= size()) {
        throw InputError("excluded coordinate out of range");
    }
    excluded_[i] = 1;
}

std::size_t Instance::excluded_count() const {
    return static_cast<std::size_t>(std::count(excluded_.begin(), excluded_.end(), 1));
}

std::vector<std::size_t> Instance::marked_set() const {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < size(); i++) {
        if (marked(i)) {
            m.push_back(i);
        }
    }
    return m;
}

std::size_t Instance::marked_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); i++) {
        c += marked(i);
    }
    return c;
}

Instance Instance::with_negated_g() const {
    Instance result(std::make_shared<const InnerFunction>(g_->negated()), x_, y_);
    result.excluded_ = excluded_;
    return result;
}

bool symcomm::eval_composed(const SymmetricSpec &f,
                            const InnerFunction &g,
                            std::span<const std::uint32_t> x,
                            std::span<const std::uint32_t> y) {
    if (x.size() != f.n() || y.size() != f.n()) {
        throw InputError("arity mismatch: f has n = " + std::to_string(f.n()) + " but inputs have " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()) + " coordinates");
    }
    std::size_t weight = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        weight += g(x[i], y[i]);
    }
    return f.value(weight);
}

bool symcomm::eval_composed(const SymmetricSpec &f, const Instance &instance) {
    if (instance.size() != f.n()) {
        throw InputError("arity mismatch between f and instance");
    }
    std::size_t weight = 0;
    for (std::size_t i = 0; i < instance.size(); i++) {
        weight += instance.value(i);
    }
    return f.value(weight);
}
