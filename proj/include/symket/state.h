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

#ifndef SYMKET_STATE_H
#define SYMKET_STATE_H

#include <iosfwd>
#include <set>
#include <string>

#include "symket/base_state.h"
#include "symket/scalar.h"
#include "symket/term_map.h"

namespace symket {

/// Finite linear combination of mutually compatible base states.
///
/// Coefficients are stored simplified and terms whose coefficient simplifies to
/// zero are dropped, so the empty state is the null vector. Terms keep their
/// insertion order, which is also the rendering order.
class State {
   public:
    State() = default;
    /// The single-term state {base: 1}.
    explicit State(const BaseState &base);

    const TermMap<BaseState> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    /// Zero when `base` is absent.
    Scalar coefficient(const BaseState &base) const;

    /// Throws IncompatibleStates when `base` cannot join the existing terms.
    void add_term(const BaseState &base, const Scalar &coefficient);

    State &operator+=(const State &other);
    State &operator-=(const State &other);
    State &operator*=(const Scalar &factor);
    /// `divisor` must be numeric.
    State &operator/=(const Scalar &divisor);

    /// <this|ket>. The ket's variables are primed first so the two integration
    /// variable sets stay apart.
    Scalar inner_product(const State &ket) const;

    State replace_var(const std::string &old_name, const std::string &new_name) const;
    /// Primes the integration variables only; amplitude symbols such as `a` are
    /// constants and keep their names.
    State prime_variables() const;
    /// Fock operator variables plus function and delta arguments.
    std::set<std::string> free_variables() const;

    /// "0.5*|0> + 0.5*|1>"; the null vector renders "0".
    std::string str() const;
    /// "State([(BaseQubitState('0'), 1.0)])"
    std::string repr() const;

   private:
    TermMap<BaseState> terms_;
};

State to_state(const BaseState &base);

State operator+(State a, const State &b);
State operator-(State a, const State &b);
State operator-(State s);
State operator*(State s, const Scalar &factor);
State operator*(const Scalar &factor, State s);
State operator/(State s, const Scalar &divisor);

Scalar inner_product(const State &bra, const State &ket);
State tensor_product(const State &a, const State &b);

/// Renames a variable in every coefficient and inside every Fock base state.
State replace_var(const State &s, const std::string &old_name, const std::string &new_name);
State prime_variables(const State &s);

std::ostream &operator<<(std::ostream &out, const State &s);

}  // namespace symket

#endif
