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

#include "symket/operator.h"

#include <algorithm>
#include <ostream>

#include "symket/errors.h"

namespace symket {

namespace {

bool disjoint(const std::set<std::string> &a, const std::set<std::string> &b) {
    return std::none_of(a.begin(), a.end(), [&](const std::string &v) { return b.count(v) > 0; });
}

QuditShape shape_of(const BaseState &b) {
    auto q = b.qudit();
    if (!q) {
        throw IncompatibleStates("matrix conversion needs qudit base states, got " + b.ket());
    }
    return {q->num_qudits(), q->base()};
}

Eigen::Index basis_index(const QuditBaseState &q) {
    Eigen::Index idx = 0;
    for (char c : q.digits()) {
        idx = idx * q.base() + (c - '0');
    }
    return idx;
}

Eigen::Index dimension(const QuditShape &shape) {
    Eigen::Index d = 1;
    for (size_t k = 0; k < shape.num_qudits; k++) {
        d *= shape.base;
    }
    return d;
}

}  // namespace

BaseOperator::BaseOperator(BaseState left, BaseState right)
    : left_(std::move(left)), right_(std::move(right)), key_(left_.key() + "><" + right_.key()) {
}

std::string BaseOperator::str() const {
    return "Op[" + left_.ket() + right_.bra() + "]";
}

Operator::Operator(const BaseOperator &base) {
    terms_.add(base, Scalar(1.0));
}

Scalar Operator::coefficient(const BaseOperator &base) const {
    const Scalar *c = terms_.find(base);
    return c ? *c : Scalar();
}

void Operator::add_term(const BaseOperator &base, const Scalar &coefficient) {
    if (!terms_.empty()) {
        const auto &first = terms_.front().first;
        if (!first.left().compatible(base.left()) || !first.right().compatible(base.right())) {
            throw IncompatibleStates("cannot add " + base.str() + " to an operator containing " + first.str());
        }
    }
    terms_.add(base, coefficient);
}

Operator &Operator::operator+=(const Operator &other) {
    for (const auto &[base, coef] : other.terms_) {
        add_term(base, coef);
    }
    return *this;
}

Operator &Operator::operator-=(const Operator &other) {
    for (const auto &[base, coef] : other.terms_) {
        add_term(base, -coef);
    }
    return *this;
}

Operator &Operator::operator*=(const Scalar &factor) {
    Operator out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(base, coef * factor);
    }
    return *this = std::move(out);
}

Operator Operator::dagger() const {
    Operator out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(BaseOperator(base.right(), base.left()), conjugate(coef));
    }
    return out;
}

Operator Operator::simplify() const {
    Operator out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(base, coef);
    }
    return out;
}

Operator Operator::replace_var(const std::string &old_name, const std::string &new_name) const {
    Operator out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(
            BaseOperator(base.left().replace_var(old_name, new_name), base.right().replace_var(old_name, new_name)),
            symket::replace_var(coef, old_name, new_name));
    }
    return out;
}

Operator Operator::prime_variables() const {
    std::set<std::string> names = free_variables();
    Operator out;
    for (const auto &[base, coef] : terms_) {
        out.terms_.add(
            BaseOperator(base.left().prime_variables(), base.right().prime_variables()),
            symket::prime_variables(coef, names));
    }
    return out;
}

std::set<std::string> Operator::free_variables() const {
    std::set<std::string> out;
    for (const auto &[base, coef] : terms_) {
        out.merge(base.left().variables());
        out.merge(base.right().variables());
        out.merge(symket::integration_variables(coef));
    }
    return out;
}

std::string Operator::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[base, coef] : terms_) {
        out += (out.empty() ? "" : " + ") + coef.str() + "*" + base.str();
    }
    return out;
}

Operator outer_product(const State &ket, const State &bra) {
    Operator out;
    for (const auto &[left, left_coef] : ket.terms()) {
        for (const auto &[right, right_coef] : bra.terms()) {
            out.add_term(BaseOperator(left, right), left_coef * conjugate(right_coef));
        }
    }
    return out;
}

State apply(const Operator &op, const State &s) {
    std::set<std::string> op_vars = op.free_variables();
    State input = s;
    while (!disjoint(op_vars, input.free_variables())) {
        input = input.prime_variables();
    }
    State out;
    for (const auto &[base, op_coef] : op.terms()) {
        for (const auto &[ket, ket_coef] : input.terms()) {
            Scalar overlap = base.right().inner_product(ket);
            if (overlap.is_zero()) {
                continue;
            }
            out.add_term(base.left(), op_coef * ket_coef * overlap);
        }
    }
    return out;
}

Operator compose(const Operator &a, const Operator &b) {
    std::set<std::string> a_vars = a.free_variables();
    std::set<std::string> b_vars = b.free_variables();
    for (const auto &v : a_vars) {
        if (b_vars.count(v)) {
            throw VariableCollision("operators share the variable '" + v + "'; rename one side first");
        }
    }
    Operator out;
    for (const auto &[base_a, coef_a] : a.terms()) {
        for (const auto &[base_b, coef_b] : b.terms()) {
            Scalar overlap = base_a.right().inner_product(base_b.left());
            if (overlap.is_zero()) {
                continue;
            }
            out.add_term(BaseOperator(base_a.left(), base_b.right()), coef_a * coef_b * overlap);
        }
    }
    return out;
}

Operator dagger(const Operator &op) {
    return op.dagger();
}

Operator simplify(const Operator &op) {
    return op.simplify();
}

Operator replace_var(const Operator &op, const std::string &old_name, const std::string &new_name) {
    return op.replace_var(old_name, new_name);
}

Operator prime_variables(const Operator &op) {
    return op.prime_variables();
}

Operator operator+(Operator a, const Operator &b) {
    return a += b;
}

Operator operator-(Operator a, const Operator &b) {
    return a -= b;
}

Operator operator*(Operator op, const Scalar &factor) {
    return op *= factor;
}

Operator operator*(const Scalar &factor, Operator op) {
    return op *= factor;
}

Operator operator*(const Operator &a, const Operator &b) {
    return compose(a, b);
}

State operator*(const Operator &op, const State &s) {
    return apply(op, s);
}

std::vector<std::string> qudit_basis(const QuditShape &shape) {
    std::vector<std::string> out{""};
    for (size_t k = 0; k < shape.num_qudits; k++) {
        std::vector<std::string> next;
        for (const auto &prefix : out) {
            for (int d = 0; d < shape.base; d++) {
                next.push_back(prefix + static_cast<char>('0' + d));
            }
        }
        out = std::move(next);
    }
    return out;
}

Eigen::MatrixXcd to_matrix(
    const Operator &op, const ScalarConverter &converter, std::optional<QuditShape> rows, std::optional<QuditShape> cols) {
    if (!op.empty()) {
        const auto &first = op.terms().front().first;
        if (!rows) {
            rows = shape_of(first.left());
        }
        if (!cols) {
            cols = shape_of(first.right());
        }
    }
    if (!rows || !cols) {
        return Eigen::MatrixXcd(0, 0);
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dimension(*rows), dimension(*cols));
    for (const auto &[base, coef] : op.terms()) {
        QuditShape l = shape_of(base.left());
        QuditShape r = shape_of(base.right());
        if (l.num_qudits != rows->num_qudits || l.base != rows->base || r.num_qudits != cols->num_qudits ||
            r.base != cols->base) {
            throw IncompatibleStates("operator term " + base.str() + " does not match the matrix shape");
        }
        out(basis_index(*base.left().qudit()), basis_index(*base.right().qudit())) += converter(coef);
    }
    return out;
}

Eigen::MatrixXcd to_matrix(const Operator &op) {
    return to_matrix(op, [](const Scalar &s) { return to_complex(s); });
}

std::ostream &operator<<(std::ostream &out, const Operator &op) {
    return out << op.str();
}

}  // namespace symket
