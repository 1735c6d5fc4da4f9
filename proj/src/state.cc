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

#include "symket/state.h"

#include <algorithm>
#include <ostream>

#include "symket/errors.h"

namespace symket {

namespace {

bool disjoint(const std::set<std::string> &a, const std::set<std::string> &b) {
    return std::none_of(a.begin(), a.end(), [&](const std::string &v) { return b.count(v) > 0; });
}

}  // namespace

State::State(const BaseState &base) {
    terms_.add(base, Scalar(1.0));
}

Scalar State::coefficient(const BaseState &base) const {
    const Scalar *c = terms_.find(base);
    return c ? *c : Scalar();
}

void State::add_term(const BaseState &base, const Scalar &coefficient) {
    if (!terms_.empty() && !terms_.front().first.compatible(base)) {
        throw IncompatibleStates("cannot add " + base.ket() + " to a state containing " + terms_.front().first.ket());
    }
    terms_.add(base, coefficient);
}

State &State::operator+=(const State &other) {
    for (const auto &[base, coef] : other.terms_) {
        add_term(base, coef);
    }
    return *this;
}

State &State::operator-=(const State &other) {
    for (const auto &[base, coef] : other.terms_) {
        add_term(base, -coef);
    }
    return *this;
}

State &State::operator*=(const Scalar &factor) {
    State out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(base, coef * factor);
    }
    return *this = std::move(out);
}

State &State::operator/=(const Scalar &divisor) {
    State out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(base, coef / divisor);
    }
    return *this = std::move(out);
}

Scalar State::inner_product(const State &ket) const {
    std::set<std::string> own = free_variables();
    State primed = ket.prime_variables();
    while (!disjoint(own, primed.free_variables())) {
        primed = primed.prime_variables();
    }
    std::vector<Scalar> terms;
    for (const auto &[bra_base, bra_coef] : terms_) {
        for (const auto &[ket_base, ket_coef] : primed.terms_) {
            Scalar overlap = bra_base.inner_product(ket_base);
            if (overlap.is_zero()) {
                continue;
            }
            terms.push_back(conjugate(bra_coef) * ket_coef * overlap);
        }
    }
    if (terms.empty()) {
        return Scalar();
    }
    return simplify(terms.size() == 1 ? terms.front() : Scalar::sum(std::move(terms)));
}

State State::replace_var(const std::string &old_name, const std::string &new_name) const {
    State out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(base.replace_var(old_name, new_name), symket::replace_var(coef, old_name, new_name));
    }
    return out;
}

State State::prime_variables() const {
    std::set<std::string> names = free_variables();
    State out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(base.prime_variables(), symket::prime_variables(coef, names));
    }
    return out;
}

std::set<std::string> State::free_variables() const {
    std::set<std::string> out;
    for (const auto &[base, coef] : terms_) {
        out.merge(base.variables());
        out.merge(symket::integration_variables(coef));
    }
    return out;
}

std::string State::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[base, coef] : terms_) {
        out += (out.empty() ? "" : " + ") + coef.str() + "*" + base.ket();
    }
    return out;
}

std::string State::repr() const {
    std::string out = "State([";
    bool first = true;
    for (const auto &[base, coef] : terms_) {
        out += (first ? "(" : ", (") + base.repr() + ", " + coef.repr() + ")";
        first = false;
    }
    return out + "])";
}

State to_state(const BaseState &base) {
    return State(base);
}

State operator+(State a, const State &b) {
    return a += b;
}

State operator-(State a, const State &b) {
    return a -= b;
}

State operator-(State s) {
    return s *= Scalar(-1.0);
}

State operator*(State s, const Scalar &factor) {
    return s *= factor;
}

State operator*(const Scalar &factor, State s) {
    return s *= factor;
}

State operator/(State s, const Scalar &divisor) {
    return s /= divisor;
}

Scalar inner_product(const State &bra, const State &ket) {
    return bra.inner_product(ket);
}

State tensor_product(const State &a, const State &b) {
    State out;
    for (const auto &[base_a, coef_a] : a.terms()) {
        for (const auto &[base_b, coef_b] : b.terms()) {
            out.add_term(base_a.tensor_product(base_b), coef_a * coef_b);
        }
    }
    return out;
}

State replace_var(const State &s, const std::string &old_name, const std::string &new_name) {
    return s.replace_var(old_name, new_name);
}

State prime_variables(const State &s) {
    return s.prime_variables();
}

std::ostream &operator<<(std::ostream &out, const State &s) {
    return out << s.str();
}

}  // namespace symket
