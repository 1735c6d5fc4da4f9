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

#ifndef SYMKET_BASE_STATE_H
#define SYMKET_BASE_STATE_H

#include <set>
#include <string>
#include <variant>

#include "symket/fock.h"
#include "symket/scalar.h"

namespace symket {

/// Computational basis state of one or more qudits, stored as a digit string.
/// Qubits are the base-2 case. Bases above 10 are rejected (one character per digit).
class QuditBaseState {
   public:
    explicit QuditBaseState(std::string digits, int base = 2);

    const std::string &digits() const {
        return digits_;
    }
    int base() const {
        return base_;
    }
    size_t num_qudits() const {
        return digits_.size();
    }

    std::string ket() const {
        return "|" + digits_ + ">";
    }
    std::string bra() const {
        return "<" + digits_ + "|";
    }
    std::string repr() const;

    bool operator==(const QuditBaseState &) const = default;

   private:
    std::string digits_;
    int base_;
};

/// One term of a state: a qudit digit string or a Fock creation-operator product.
///
/// Equality and hashing go through `key()`, the ket rendering tagged with the
/// variant, so a qubit |0> and the Fock vacuum never collide.
class BaseState {
   public:
    BaseState(QuditBaseState qudit);
    BaseState(BaseFockState fock);

    const std::variant<QuditBaseState, BaseFockState> &value() const {
        return value_;
    }
    const QuditBaseState *qudit() const {
        return std::get_if<QuditBaseState>(&value_);
    }
    const BaseFockState *fock() const {
        return std::get_if<BaseFockState>(&value_);
    }

    const std::string &key() const {
        return key_;
    }
    std::string ket() const;
    std::string bra() const;
    std::string repr() const;

    /// Whether the two may appear as keys of the same linear combination.
    bool compatible(const BaseState &other) const;

    /// <this|ket>. Throws IncompatibleStates across variants or qudit shapes.
    Scalar inner_product(const BaseState &ket) const;
    BaseState tensor_product(const BaseState &other) const;

    BaseState replace_var(const std::string &old_name, const std::string &new_name) const;
    BaseState prime_variables() const;
    std::set<std::string> variables() const;

    bool operator==(const BaseState &other) const {
        return key_ == other.key_;
    }

   private:
    std::variant<QuditBaseState, BaseFockState> value_;
    std::string key_;
};

}  // namespace symket

#endif
