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

#ifndef SYMKET_OPERATOR_H
#define SYMKET_OPERATOR_H

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symket/base_state.h"
#include "symket/scalar.h"
#include "symket/state.h"
#include "symket/term_map.h"

namespace symket {

/// |left><right|. The two sides may live in different Hilbert spaces.
class BaseOperator {
   public:
    BaseOperator(BaseState left, BaseState right);

    const BaseState &left() const {
        return left_;
    }
    const BaseState &right() const {
        return right_;
    }
    const std::string &key() const {
        return key_;
    }
    /// "Op[|0><1|]"
    std::string str() const;

   private:
    BaseState left_;
    BaseState right_;
    std::string key_;
};

/// Linear combination of |left><right| terms. All lefts are mutually compatible,
/// as are all rights; zero coefficients are never stored.
class Operator {
   public:
    Operator() = default;
    explicit Operator(const BaseOperator &base);

    const TermMap<BaseOperator> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    Scalar coefficient(const BaseOperator &base) const;

    /// Throws IncompatibleStates when either side clashes with the existing terms.
    void add_term(const BaseOperator &base, const Scalar &coefficient);

    Operator &operator+=(const Operator &other);
    Operator &operator-=(const Operator &other);
    Operator &operator*=(const Scalar &factor);

    Operator dagger() const;
    /// Re-simplifies every coefficient and drops the ones that vanish.
    Operator simplify() const;
    Operator replace_var(const std::string &old_name, const std::string &new_name) const;
    /// Primes the integration variables only; amplitude symbols such as `a` are
    /// constants and keep their names.
    Operator prime_variables() const;
    /// Fock operator variables plus function and delta arguments.
    std::set<std::string> free_variables() const;

    /// "1*Op[|0><0|] + 1*Op[|1><1|]"; the null operator renders "0".
    std::string str() const;

   private:
    TermMap<BaseOperator> terms_;
};

/// Sum over i, j of ket_i * conj(bra_j) * |i><j|.
Operator outer_product(const State &ket, const State &bra);

/// Applies `op` to `s`. If the state shares variable names with the operator,
/// the state's variables are primed until they are disjoint.
State apply(const Operator &op, const State &s);

/// a * b. Throws VariableCollision when the operands share a free variable;
/// rename one side first (e.g. with `prime_variables`).
Operator compose(const Operator &a, const Operator &b);

Operator dagger(const Operator &op);
Operator simplify(const Operator &op);
Operator replace_var(const Operator &op, const std::string &old_name, const std::string &new_name);
Operator prime_variables(const Operator &op);

Operator operator+(Operator a, const Operator &b);
Operator operator-(Operator a, const Operator &b);
Operator operator*(Operator op, const Scalar &factor);
Operator operator*(const Scalar &factor, Operator op);
Operator operator*(const Operator &a, const Operator &b);
State operator*(const Operator &op, const State &s);

using ScalarConverter = std::function<std::complex<double>(const Scalar &)>;

/// Number of qudits and their dimension.
struct QuditShape {
    size_t num_qudits;
    int base;
};

/// All digit strings of the given shape in lexicographic order ("00", "01", "10", "11").
std::vector<std::string> qudit_basis(const QuditShape &shape);

/// Dense matrix of an operator whose sides are qudit states. Row index follows the
/// left (ket) basis, column index the right (bra) basis, both enumerated by
/// `qudit_basis`. Shapes are read from the terms unless given; a null operator
/// without shapes gives a 0x0 matrix. Throws IncompatibleStates for Fock sides.
Eigen::MatrixXcd to_matrix(
    const Operator &op,
    const ScalarConverter &converter,
    std::optional<QuditShape> rows = std::nullopt,
    std::optional<QuditShape> cols = std::nullopt);

/// `to_matrix` with `to_complex` as converter.
Eigen::MatrixXcd to_matrix(const Operator &op);

std::ostream &operator<<(std::ostream &out, const Operator &op);

}  // namespace symket

#endif
