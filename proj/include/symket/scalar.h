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

#ifndef SYMKET_SCALAR_H
#define SYMKET_SCALAR_H

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace symket {

/// Numbers with magnitude below this are treated as exact zeros by `simplify`.
inline constexpr double kZeroTolerance = 1e-12;

/// Variant tags, in the order used when canonically sorting sum and product children.
enum class ScalarKind : std::uint8_t {
    Number,
    Variable,
    AbsSquared,
    Function,
    InnerProduct,
    Delta,
    Sum,
    Product,
};

/// Immutable symbolic amplitude expression.
///
/// A `Scalar` is a cheap handle onto a shared, immutable expression node. Every
/// operation returns a new value, so scalars can be shared freely between threads.
/// Each node caches its rendered text (`str`) and its canonical key (`key`); the
/// key differs from the text only in that delta arguments are sorted, which makes
/// D[w-v] and D[v-w] compare equal.
class Scalar {
   public:
    struct Node;

    /// The number zero.
    Scalar();
    Scalar(double value);
    Scalar(std::complex<double> value);

    static Scalar variable(std::string name, bool conjugated = false);
    /// Wave-packet amplitude `name(argument)`, rendered `phi(w)` or `phi*(w)`.
    static Scalar function(std::string name, std::string argument, bool conjugated = false);
    /// Overlap <left|right> of two wave packets.
    static Scalar inner_product_function(std::string left, std::string right);
    /// Delta distribution D[first-second].
    static Scalar delta(std::string first, std::string second);
    static Scalar abs_squared(Scalar inner);
    /// Throws std::invalid_argument when `terms` is empty.
    static Scalar sum(std::vector<Scalar> terms);
    /// Throws std::invalid_argument when `factors` is empty.
    static Scalar product(std::vector<Scalar> factors);

    ScalarKind kind() const;
    const Node &node() const {
        return *node_;
    }

    /// Children of a sum or product; empty for every other kind.
    std::span<const Scalar> children() const;

    const std::string &str() const;
    const std::string &key() const;
    /// Constructor-style rendering, e.g. `InnerProductFunction('phi', 'psi')`.
    std::string repr() const;

    bool is_zero() const;
    bool is_one() const;

   private:
    explicit Scalar(std::shared_ptr<const Node> node) : node_(std::move(node)) {
    }
    static Scalar make(auto payload);

    std::shared_ptr<const Node> node_;
};

namespace node {

struct Number {
    std::complex<double> value;
};
struct Variable {
    std::string name;
    bool conjugated;
};
struct AbsSquared {
    Scalar inner;
};
struct Function {
    std::string name;
    std::string argument;
    bool conjugated;
};
struct InnerProduct {
    std::string left;
    std::string right;
};
struct Delta {
    std::string first;
    std::string second;
};
struct Sum {
    std::vector<Scalar> terms;
};
struct Product {
    std::vector<Scalar> factors;
};

}  // namespace node

using ScalarPayload = std::variant<
    node::Number,
    node::Variable,
    node::AbsSquared,
    node::Function,
    node::InnerProduct,
    node::Delta,
    node::Sum,
    node::Product>;

struct Scalar::Node {
    ScalarPayload payload;
    std::string text;
    std::string key;
};

template <typename T>
const T *get_if(const Scalar &s) {
    return std::get_if<T>(&s.node().payload);
}

/// Total order on (kind, canonical key).
bool canonical_less(const Scalar &a, const Scalar &b);

/// Equal iff the simplified canonical forms coincide.
bool structurally_equal(const Scalar &a, const Scalar &b);

Scalar conjugate(const Scalar &s);

/// Builds a product node, flattening nested products and rewriting x*x^* into |x|^2.
Scalar multiply(const Scalar &a, const Scalar &b);
/// Builds a sum node, flattening nested sums.
Scalar add(const Scalar &a, const Scalar &b);

Scalar operator*(const Scalar &a, const Scalar &b);
Scalar operator+(const Scalar &a, const Scalar &b);
Scalar operator-(const Scalar &s);
Scalar operator-(const Scalar &a, const Scalar &b);
/// Division is defined for numeric divisors only; throws NotNumeric otherwise.
Scalar operator/(const Scalar &a, const Scalar &b);

/// Distributes products (and |x|^2 of compound x) over sums.
Scalar expand(const Scalar &s);

/// Rewrites to the canonical fixed point: flattened, numbers folded, like terms
/// merged, zeros pruned, children sorted.
Scalar simplify(const Scalar &s);

/// Renames `old_name` to `new_name` in variables, function arguments and delta arguments.
Scalar replace_var(const Scalar &s, const std::string &old_name, const std::string &new_name);
/// Appends a prime to every variable name. Not idempotent: w -> w' -> w''.
Scalar prime_variables(const Scalar &s);
/// Primes only the names in `names`.
Scalar prime_variables(const Scalar &s, const std::set<std::string> &names);

std::set<std::string> free_variables(const Scalar &s);
/// Function and delta arguments only; amplitude symbols are left out.
std::set<std::string> integration_variables(const Scalar &s);

bool is_number(const Scalar &s);
/// Throws NotNumeric unless `is_number(s)`.
std::complex<double> to_complex(const Scalar &s);

/// Numeric values for the symbolic leaves of an expression.
struct Valuation {
    std::map<std::string, std::complex<double>> variables;
    std::function<std::complex<double>(const std::string &name, const std::string &argument)> function;
    std::function<double(const std::string &first, const std::string &second)> delta;
    std::function<std::complex<double>(const std::string &left, const std::string &right)> overlap;
};

/// Evaluates `s` under `valuation`. Throws NotNumeric on any leaf the valuation cannot supply.
std::complex<double> evaluate(const Scalar &s, const Valuation &valuation);

/// Shortest round-trip rendering; integral reals drop the fraction ("1", "-2").
std::string format_number(std::complex<double> value);
/// Like Python's float repr: integral values keep ".0".
std::string format_float(double value);

std::ostream &operator<<(std::ostream &out, const Scalar &s);

}  // namespace symket

#endif
