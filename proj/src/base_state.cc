// Copyright 2026 The Symket Authors
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

#include "symket/base_state.h"

#include <stdexcept>

#include "symket/errors.h"

namespace symket {

QuditBaseState::QuditBaseState(std::string digits, int base) : digits_(std::move(digits)), base_(base) {
    if (base_ < 2 || base_ > 10) {
        throw std::invalid_argument("qudit base must be between 2 and 10, got " + std::to_string(base_));
    }
    if (digits_.empty()) {
        throw std::invalid_argument("qudit base state needs at least one digit");
    }
    for (char c : digits_) {
        if (c < '0' || c >= '0' + base_) {
            throw std::invalid_argument("invalid digit '" + std::string(1, c) + "' for base " + std::to_string(base_));
        }
    }
}

std::string QuditBaseState::repr() const {
    if (base_ == 2) {
        return "BaseQubitState('" + digits_ + "')";
    }
    return "BaseQuditState('" + digits_ + "', base=" + std::to_string(base_) + ")";
}

BaseState::BaseState(QuditBaseState qudit) : value_(std::move(qudit)) {
    const auto &q = std::get<QuditBaseState>(value_);
    key_ = "q" + std::to_string(q.base()) + ":" + q.ket();
}

BaseState::BaseState(BaseFockState fock) : value_(std::move(fock)) {
    key_ = "f:" + std::get<BaseFockState>(value_).ket();
}

std::string BaseState::ket() const {
    return std::visit([](const auto &v) { return v.ket(); }, value_);
}

std::string BaseState::bra() const {
    return std::visit([](const auto &v) { return v.bra(); }, value_);
}

std::string BaseState::repr() const {
    return std::visit([](const auto &v) { return v.repr(); }, value_);
}

bool BaseState::compatible(const BaseState &other) const {
    if (fock() && other.fock()) {
        return true;
    }
    auto a = qudit();
    auto b = other.qudit();
    return a && b && a->base() == b->base() && a->num_qudits() == b->num_qudits();
}

Scalar BaseState::inner_product(const BaseState &ket) const {
    if (fock() && ket.fock()) {
        return fock_inner_product(*fock(), *ket.fock());
    }
    if (!compatible(ket)) {
        throw IncompatibleStates("cannot take inner product of " + bra() + " and " + ket.ket());
    }
    return Scalar(*qudit() == *ket.qudit() ? 1.0 : 0.0);
}

BaseState BaseState::tensor_product(const BaseState &other) const {
    if (fock() && other.fock()) {
        return fock_tensor_product(*fock(), *other.fock());
    }
    auto a = qudit();
    auto b = other.qudit();
    if (!a || !b || a->base() != b->base()) {
        throw IncompatibleStates("cannot take tensor product of " + ket() + " and " + other.ket());
    }
    return QuditBaseState(a->digits() + b->digits(), a->base());
}

BaseState BaseState::replace_var(const std::string &old_name, const std::string &new_name) const {
    if (auto f = fock()) {
        return f->replace_var(old_name, new_name);
    }
    return *this;
}

BaseState BaseState::prime_variables() const {
    if (auto f = fock()) {
        return f->prime_variables();
    }
    return *this;
}

std::set<std::string> BaseState::variables() const {
    if (auto f = fock()) {
        return f->variables();
    }
    return {};
}

}  // namespace symket
