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

#include "symket/scalar.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "symket/errors.h"
#include "symket/scalar_json.h"

namespace symket {

namespace {

std::string shortest(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

bool integral(double x) {
    return std::isfinite(x) && x == std::trunc(x) && std::fabs(x) < 1e16;
}

std::string join(const std::vector<Scalar> &items, const char *sep, bool use_key) {
    std::string out;
    for (size_t k = 0; k < items.size(); k++) {
        if (k) {
            out += sep;
        }
        out += use_key ? items[k].key() : items[k].str();
    }
    return out;
}

struct Renderer {
    bool use_key;

    std::string operator()(const node::Number &n) const {
        return format_number(n.value);
    }
    std::string operator()(const node::Variable &v) const {
        return v.conjugated ? "(" + v.name + "*)" : v.name;
    }
    std::string operator()(const node::AbsSquared &a) const {
        return "|" + (use_key ? a.inner.key() : a.inner.str()) + "|^2";
    }
    std::string operator()(const node::Function &f) const {
        return f.name + (f.conjugated ? "*(" : "(") + f.argument + ")";
    }
    std::string operator()(const node::InnerProduct &p) const {
        return "<" + p.left + "|" + p.right + ">";
    }
    std::string operator()(const node::Delta &d) const {
        if (use_key && d.second < d.first) {
            return "D[" + d.second + "-" + d.first + "]";
        }
        return "D[" + d.first + "-" + d.second + "]";
    }
    std::string operator()(const node::Sum &s) const {
        return "(" + join(s.terms, " + ", use_key) + ")";
    }
    std::string operator()(const node::Product &p) const {
        return join(p.factors, "*", use_key);
    }
};

// x and y are the same atom up to the conjugation flag, with opposite flags.
bool conjugate_pair(const Scalar &x, const Scalar &y) {
    if (auto a = get_if<node::Variable>(x)) {
        auto b = get_if<node::Variable>(y);
        return b && a->name == b->name && a->conjugated != b->conjugated;
    }
    if (auto a = get_if<node::Function>(x)) {
        auto b = get_if<node::Function>(y);
        return b && a->name == b->name && a->argument == b->argument && a->conjugated != b->conjugated;
    }
    return false;
}

Scalar unconjugated(const Scalar &x) {
    if (auto v = get_if<node::Variable>(x)) {
        return Scalar::variable(v->name, false);
    }
    auto f = get_if<node::Function>(x);
    return Scalar::function(f->name, f->argument, false);
}

// Replaces each x, x^* pair by |x|^2 at the position of the first member.
void merge_conjugate_pairs(std::vector<Scalar> &factors) {
    std::vector<bool> consumed(factors.size(), false);
    std::vector<Scalar> out;
    out.reserve(factors.size());
    for (size_t i = 0; i < factors.size(); i++) {
        if (consumed[i]) {
            continue;
        }
        bool merged = false;
        for (size_t j = i + 1; j < factors.size(); j++) {
            if (!consumed[j] && conjugate_pair(factors[i], factors[j])) {
                consumed[j] = true;
                out.push_back(Scalar::abs_squared(unconjugated(factors[i])));
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.push_back(factors[i]);
        }
    }
    factors = std::move(out);
}

template <typename Node>
void append_flattened(std::vector<Scalar> &out, const Scalar &s) {
    if (auto n = get_if<Node>(s)) {
        const auto &items = [&]() -> const std::vector<Scalar> & {
            if constexpr (std::is_same_v<Node, node::Sum>) {
                return n->terms;
            } else {
                return n->factors;
            }
        }();
        out.insert(out.end(), items.begin(), items.end());
    } else {
        out.push_back(s);
    }
}

// Rebuilds `s` bottom-up, giving `leaf` the chance to replace every non-compound node.
Scalar map_leaves(const Scalar &s, const std::function<Scalar(const Scalar &)> &leaf) {
    if (auto sum = get_if<node::Sum>(s)) {
        std::vector<Scalar> terms;
        terms.reserve(sum->terms.size());
        for (const auto &t : sum->terms) {
            terms.push_back(map_leaves(t, leaf));
        }
        return Scalar::sum(std::move(terms));
    }
    if (auto prod = get_if<node::Product>(s)) {
        std::vector<Scalar> factors;
        factors.reserve(prod->factors.size());
        for (const auto &f : prod->factors) {
            factors.push_back(map_leaves(f, leaf));
        }
        return Scalar::product(std::move(factors));
    }
    if (auto abs = get_if<node::AbsSquared>(s)) {
        return Scalar::abs_squared(map_leaves(abs->inner, leaf));
    }
    return leaf(s);
}

Scalar rename(const Scalar &s, const std::function<std::string(const std::string &)> &fn) {
    return map_leaves(s, [&](const Scalar &leaf) -> Scalar {
        if (auto v = get_if<node::Variable>(leaf)) {
            return Scalar::variable(fn(v->name), v->conjugated);
        }
        if (auto f = get_if<node::Function>(leaf)) {
            return Scalar::function(f->name, fn(f->argument), f->conjugated);
        }
        if (auto d = get_if<node::Delta>(leaf)) {
            return Scalar::delta(fn(d->first), fn(d->second));
        }
        return leaf;
    });
}

// coefficient * rest, with the numeric coefficient of a simplified term split off.
std::pair<std::complex<double>, Scalar> split_coefficient(const Scalar &term) {
    if (auto prod = get_if<node::Product>(term)) {
        if (auto num = get_if<node::Number>(prod->factors.front())) {
            std::vector<Scalar> rest(prod->factors.begin() + 1, prod->factors.end());
            if (rest.size() == 1) {
                return {num->value, rest.front()};
            }
            return {num->value, Scalar::product(std::move(rest))};
        }
    }
    return {1.0, term};
}

Scalar with_coefficient(std::complex<double> coef, const Scalar &rest) {
    if (coef == 1.0) {
        return rest;
    }
    std::vector<Scalar> factors{Scalar(coef)};
    append_flattened<node::Product>(factors, rest);
    return Scalar::product(std::move(factors));
}

void sort_canonical(std::vector<Scalar> &items) {
    std::stable_sort(items.begin(), items.end(), canonical_less);
}

Scalar simplify_sum(const node::Sum &sum);
Scalar simplify_product(const node::Product &prod);

Scalar simplify_once(const Scalar &s) {
    return std::visit(
        [&](const auto &n) -> Scalar {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) {
                return std::abs(n.value) < kZeroTolerance ? Scalar() : s;
            } else if constexpr (std::is_same_v<T, node::InnerProduct>) {
                // Wave packets are unit-norm.
                return n.left == n.right ? Scalar(1.0) : s;
            } else if constexpr (std::is_same_v<T, node::AbsSquared>) {
                Scalar inner = simplify_once(n.inner);
                if (auto num = get_if<node::Number>(inner)) {
                    return Scalar(std::norm(num->value));
                }
                return Scalar::abs_squared(inner);
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                return simplify_sum(n);
            } else if constexpr (std::is_same_v<T, node::Product>) {
                return simplify_product(n);
            } else {
                return s;
            }
        },
        s.node().payload);
}

Scalar simplify_sum(const node::Sum &sum) {
    std::vector<Scalar> flat;
    for (const auto &t : sum.terms) {
        append_flattened<node::Sum>(flat, simplify_once(t));
    }
    std::complex<double> constant = 0.0;
    std::vector<std::pair<Scalar, std::complex<double>>> groups;
    std::unordered_map<std::string, size_t> index;
    for (const auto &t : flat) {
        if (auto num = get_if<node::Number>(t)) {
            constant += num->value;
            continue;
        }
        auto [coef, rest] = split_coefficient(t);
        auto [it, inserted] = index.try_emplace(rest.key(), groups.size());
        if (inserted) {
            groups.emplace_back(rest, coef);
        } else {
            groups[it->second].second += coef;
        }
    }
    std::vector<Scalar> terms;
    if (std::abs(constant) >= kZeroTolerance) {
        terms.emplace_back(constant);
    }
    for (const auto &[rest, coef] : groups) {
        if (std::abs(coef) >= kZeroTolerance) {
            terms.push_back(with_coefficient(coef, rest));
        }
    }
    if (terms.empty()) {
        return Scalar();
    }
    if (terms.size() == 1) {
        return terms.front();
    }
    sort_canonical(terms);
    return Scalar::sum(std::move(terms));
}

Scalar simplify_product(const node::Product &prod) {
    std::vector<Scalar> flat;
    for (const auto &f : prod.factors) {
        append_flattened<node::Product>(flat, simplify_once(f));
    }
    std::complex<double> coef = 1.0;
    std::vector<Scalar> rest;
    for (const auto &f : flat) {
        if (auto num = get_if<node::Number>(f)) {
            coef *= num->value;
        } else {
            rest.push_back(f);
        }
    }
    if (std::abs(coef) < kZeroTolerance) {
        return Scalar();
    }
    merge_conjugate_pairs(rest);
    sort_canonical(rest);
    if (rest.empty()) {
        return Scalar(coef);
    }
    if (rest.size() == 1) {
        return with_coefficient(coef, rest.front());
    }
    return with_coefficient(coef, Scalar::product(std::move(rest)));
}

void expand_terms(const Scalar &s, std::vector<Scalar> &out);

std::vector<Scalar> expand_terms(const Scalar &s) {
    std::vector<Scalar> out;
    expand_terms(s, out);
    return out;
}

bool has_compound(const Scalar &s) {
    return s.kind() == ScalarKind::Sum || s.kind() == ScalarKind::Product || s.kind() == ScalarKind::AbsSquared;
}

void expand_terms(const Scalar &s, std::vector<Scalar> &out) {
    if (auto sum = get_if<node::Sum>(s)) {
        for (const auto &t : sum->terms) {
            expand_terms(t, out);
        }
        return;
    }
    if (auto prod = get_if<node::Product>(s)) {
        std::vector<Scalar> acc = expand_terms(prod->factors.front());
        for (size_t k = 1; k < prod->factors.size(); k++) {
            std::vector<Scalar> next;
            std::vector<Scalar> choices = expand_terms(prod->factors[k]);
            next.reserve(acc.size() * choices.size());
            for (const auto &a : acc) {
                for (const auto &c : choices) {
                    next.push_back(multiply(a, c));
                }
            }
            acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
        return;
    }
    if (auto abs = get_if<node::AbsSquared>(s)) {
        if (has_compound(abs->inner)) {
            // |x|^2 = x * x^*
            expand_terms(Scalar::product({abs->inner, conjugate(abs->inner)}), out);
            return;
        }
    }
    out.push_back(s);
}

}  // namespace

Scalar::Scalar() : Scalar(std::complex<double>(0.0)) {
}

Scalar::Scalar(double value) : Scalar(std::complex<double>(value)) {
}

Scalar::Scalar(std::complex<double> value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw std::invalid_argument("scalar literals must be finite");
    }
    // Normalize negative zeros so rendering and keys are stable.
    value = {value.real() + 0.0, value.imag() + 0.0};
    *this = make(node::Number{value});
}

Scalar Scalar::make(auto payload) {
    auto n = std::make_shared<Node>();
    n->text = Renderer{false}(payload);
    n->key = Renderer{true}(payload);
    n->payload = std::move(payload);
    return Scalar(std::shared_ptr<const Node>(std::move(n)));
}

Scalar Scalar::variable(std::string name, bool conjugated) {
    if (name.empty()) {
        throw std::invalid_argument("variable names must be non-empty");
    }
    return make(node::Variable{std::move(name), conjugated});
}

Scalar Scalar::function(std::string name, std::string argument, bool conjugated) {
    if (name.empty() || argument.empty()) {
        throw std::invalid_argument("function and argument names must be non-empty");
    }
    return make(node::Function{std::move(name), std::move(argument), conjugated});
}

Scalar Scalar::inner_product_function(std::string left, std::string right) {
    return make(node::InnerProduct{std::move(left), std::move(right)});
}

Scalar Scalar::delta(std::string first, std::string second) {
    return make(node::Delta{std::move(first), std::move(second)});
}

Scalar Scalar::abs_squared(Scalar inner) {
    return make(node::AbsSquared{std::move(inner)});
}

Scalar Scalar::sum(std::vector<Scalar> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("empty sum of scalars");
    }
    return make(node::Sum{std::move(terms)});
}

Scalar Scalar::product(std::vector<Scalar> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("empty product of scalars");
    }
    return make(node::Product{std::move(factors)});
}

ScalarKind Scalar::kind() const {
    return static_cast<ScalarKind>(node_->payload.index());
}

std::span<const Scalar> Scalar::children() const {
    if (auto s = std::get_if<node::Sum>(&node_->payload)) {
        return s->terms;
    }
    if (auto p = std::get_if<node::Product>(&node_->payload)) {
        return p->factors;
    }
    return {};
}

const std::string &Scalar::str() const {
    return node_->text;
}

const std::string &Scalar::key() const {
    return node_->key;
}

std::string Scalar::repr() const {
    auto q = [](const std::string &s) { return "'" + s + "'"; };
    auto list = [](std::span<const Scalar> items) {
        std::string out = "[";
        for (size_t k = 0; k < items.size(); k++) {
            out += (k ? ", " : "") + items[k].repr();
        }
        return out + "]";
    };
    return std::visit(
        [&](const auto &n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) {
                return n.value.imag() == 0.0 ? format_float(n.value.real()) : format_number(n.value);
            } else if constexpr (std::is_same_v<T, node::Variable>) {
                return "Variable(" + q(n.name) + (n.conjugated ? ", conjugated=True)" : ")");
            } else if constexpr (std::is_same_v<T, node::AbsSquared>) {
                return "AbsSquared(" + n.inner.repr() + ")";
            } else if constexpr (std::is_same_v<T, node::Function>) {
                return "SingleVarFunctionScalar(" + q(n.name) + ", " + q(n.argument) +
                       (n.conjugated ? ", conjugated=True)" : ")");
            } else if constexpr (std::is_same_v<T, node::InnerProduct>) {
                return "InnerProductFunction(" + q(n.left) + ", " + q(n.right) + ")";
            } else if constexpr (std::is_same_v<T, node::Delta>) {
                return "DeltaFunction(" + q(n.first) + ", " + q(n.second) + ")";
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                return "SumOfScalars(" + list(n.terms) + ")";
            } else {
                return "ProductOfScalars(" + list(n.factors) + ")";
            }
        },
        node_->payload);
}

bool Scalar::is_zero() const {
    auto n = get_if<node::Number>(*this);
    return n && std::abs(n->value) < kZeroTolerance;
}

bool Scalar::is_one() const {
    auto n = get_if<node::Number>(*this);
    return n && n->value == 1.0;
}

bool canonical_less(const Scalar &a, const Scalar &b) {
    if (a.kind() != b.kind()) {
        return a.kind() < b.kind();
    }
    return a.key() < b.key();
}

bool structurally_equal(const Scalar &a, const Scalar &b) {
    return simplify(a).key() == simplify(b).key();
}

Scalar conjugate(const Scalar &s) {
    return std::visit(
        [&](const auto &n) -> Scalar {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) {
                return Scalar(std::conj(n.value));
            } else if constexpr (std::is_same_v<T, node::Variable>) {
                return Scalar::variable(n.name, !n.conjugated);
            } else if constexpr (std::is_same_v<T, node::Function>) {
                return Scalar::function(n.name, n.argument, !n.conjugated);
            } else if constexpr (std::is_same_v<T, node::InnerProduct>) {
                return Scalar::inner_product_function(n.right, n.left);
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                std::vector<Scalar> terms;
                for (const auto &t : n.terms) {
                    terms.push_back(conjugate(t));
                }
                return Scalar::sum(std::move(terms));
            } else if constexpr (std::is_same_v<T, node::Product>) {
                std::vector<Scalar> factors;
                for (const auto &f : n.factors) {
                    factors.push_back(conjugate(f));
                }
                return Scalar::product(std::move(factors));
            } else {
                // AbsSquared and Delta are real.
                return s;
            }
        },
        s.node().payload);
}

Scalar multiply(const Scalar &a, const Scalar &b) {
    std::vector<Scalar> factors;
    append_flattened<node::Product>(factors, a);
    append_flattened<node::Product>(factors, b);
    merge_conjugate_pairs(factors);
    if (factors.size() == 1) {
        return factors.front();
    }
    return Scalar::product(std::move(factors));
}

Scalar add(const Scalar &a, const Scalar &b) {
    std::vector<Scalar> terms;
    append_flattened<node::Sum>(terms, a);
    append_flattened<node::Sum>(terms, b);
    return Scalar::sum(std::move(terms));
}

Scalar operator*(const Scalar &a, const Scalar &b) {
    return multiply(a, b);
}

Scalar operator+(const Scalar &a, const Scalar &b) {
    return add(a, b);
}

Scalar operator-(const Scalar &s) {
    if (auto n = get_if<node::Number>(s)) {
        return Scalar(-n->value);
    }
    return multiply(Scalar(-1.0), s);
}

Scalar operator-(const Scalar &a, const Scalar &b) {
    return add(a, -b);
}

Scalar operator/(const Scalar &a, const Scalar &b) {
    std::complex<double> divisor = to_complex(b);
    if (auto n = get_if<node::Number>(a)) {
        return Scalar(n->value / divisor);
    }
    return multiply(a, Scalar(1.0 / divisor));
}

Scalar expand(const Scalar &s) {
    std::vector<Scalar> terms = expand_terms(s);
    if (terms.size() == 1) {
        return terms.front();
    }
    return Scalar::sum(std::move(terms));
}

Scalar simplify(const Scalar &s) {
    Scalar current = simplify_once(s);
    // Each pass only shrinks or reorders the tree; a handful of passes always suffices.
    for (int pass = 0; pass < 32; pass++) {
        Scalar next = simplify_once(current);
        if (next.key() == current.key() && next.str() == current.str()) {
            return next;
        }
        current = std::move(next);
    }
    return current;
}

Scalar replace_var(const Scalar &s, const std::string &old_name, const std::string &new_name) {
    return rename(s, [&](const std::string &name) { return name == old_name ? new_name : name; });
}

Scalar prime_variables(const Scalar &s) {
    return rename(s, [](const std::string &name) { return name + "'"; });
}

Scalar prime_variables(const Scalar &s, const std::set<std::string> &names) {
    return rename(s, [&](const std::string &name) { return names.count(name) ? name + "'" : name; });
}

std::set<std::string> integration_variables(const Scalar &s) {
    std::set<std::string> out;
    map_leaves(s, [&](const Scalar &leaf) {
        if (auto f = get_if<node::Function>(leaf)) {
            out.insert(f->argument);
        } else if (auto d = get_if<node::Delta>(leaf)) {
            out.insert(d->first);
            out.insert(d->second);
        }
        return leaf;
    });
    return out;
}

std::set<std::string> free_variables(const Scalar &s) {
    std::set<std::string> out;
    map_leaves(s, [&](const Scalar &leaf) {
        if (auto v = get_if<node::Variable>(leaf)) {
            out.insert(v->name);
        } else if (auto f = get_if<node::Function>(leaf)) {
            out.insert(f->argument);
        } else if (auto d = get_if<node::Delta>(leaf)) {
            out.insert(d->first);
            out.insert(d->second);
        }
        return leaf;
    });
    return out;
}

bool is_number(const Scalar &s) {
    switch (s.kind()) {
        case ScalarKind::Number:
            return true;
        case ScalarKind::AbsSquared:
            return is_number(get_if<node::AbsSquared>(s)->inner);
        case ScalarKind::Sum:
        case ScalarKind::Product:
            return std::all_of(s.children().begin(), s.children().end(), [](const Scalar &c) { return is_number(c); });
        default:
            return false;
    }
}

std::complex<double> to_complex(const Scalar &s) {
    if (!is_number(s)) {
        throw NotNumeric("scalar is not a number: " + s.str());
    }
    return evaluate(s, Valuation{});
}

std::complex<double> evaluate(const Scalar &s, const Valuation &valuation) {
    return std::visit(
        [&](const auto &n) -> std::complex<double> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, node::Variable>) {
                auto it = valuation.variables.find(n.name);
                if (it == valuation.variables.end()) {
                    throw NotNumeric("no value for variable " + n.name);
                }
                return n.conjugated ? std::conj(it->second) : it->second;
            } else if constexpr (std::is_same_v<T, node::AbsSquared>) {
                return std::norm(evaluate(n.inner, valuation));
            } else if constexpr (std::is_same_v<T, node::Function>) {
                if (!valuation.function) {
                    throw NotNumeric("no value for function " + s.str());
                }
                auto v = valuation.function(n.name, n.argument);
                return n.conjugated ? std::conj(v) : v;
            } else if constexpr (std::is_same_v<T, node::InnerProduct>) {
                if (valuation.overlap) {
                    return valuation.overlap(n.left, n.right);
                }
                if (n.left == n.right) {
                    return 1.0;
                }
                throw NotNumeric("no value for overlap " + s.str());
            } else if constexpr (std::is_same_v<T, node::Delta>) {
                if (!valuation.delta) {
                    throw NotNumeric("no value for delta " + s.str());
                }
                return valuation.delta(n.first, n.second);
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                std::complex<double> total = 0.0;
                for (const auto &t : n.terms) {
                    total += evaluate(t, valuation);
                }
                return total;
            } else {
                std::complex<double> total = 1.0;
                for (const auto &f : n.factors) {
                    total *= evaluate(f, valuation);
                }
                return total;
            }
        },
        s.node().payload);
}

nlohmann::json to_json(const Scalar &s) {
    using nlohmann::json;
    auto children = [](std::span<const Scalar> items) {
        json out = json::array();
        for (const auto &c : items) {
            out.push_back(to_json(c));
        }
        return out;
    };
    return std::visit(
        [&](const auto &n) -> json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, node::Number>) {
                return {{"kind", "NumberLiteral"}, {"args", {n.value.real(), n.value.imag()}}};
            } else if constexpr (std::is_same_v<T, node::Variable>) {
                return {{"kind", "Variable"}, {"args", {n.name, n.conjugated}}};
            } else if constexpr (std::is_same_v<T, node::AbsSquared>) {
                return {{"kind", "AbsSquared"}, {"args", json::array({to_json(n.inner)})}};
            } else if constexpr (std::is_same_v<T, node::Function>) {
                return {{"kind", "SingleVarFunctionScalar"}, {"args", {n.name, n.argument, n.conjugated}}};
            } else if constexpr (std::is_same_v<T, node::InnerProduct>) {
                return {{"kind", "InnerProductFunction"}, {"args", {n.left, n.right}}};
            } else if constexpr (std::is_same_v<T, node::Delta>) {
                return {{"kind", "DeltaFunction"}, {"args", {n.first, n.second}}};
            } else if constexpr (std::is_same_v<T, node::Sum>) {
                return {{"kind", "SumOfScalars"}, {"args", children(n.terms)}};
            } else {
                return {{"kind", "ProductOfScalars"}, {"args", children(n.factors)}};
            }
        },
        s.node().payload);
}

std::string format_number(std::complex<double> value) {
    auto real = [](double x) { return integral(x) ? std::to_string(static_cast<long long>(x)) : shortest(x); };
    double re = value.real() + 0.0;
    double im = value.imag() + 0.0;
    if (im == 0.0) {
        return real(re);
    }
    if (re == 0.0) {
        return real(im) + "j";
    }
    return "(" + real(re) + (im < 0 ? "-" : "+") + real(std::fabs(im)) + "j)";
}

std::string format_float(double value) {
    value += 0.0;
    if (integral(value)) {
        return std::to_string(static_cast<long long>(value)) + ".0";
    }
    return shortest(value);
}

std::ostream &operator<<(std::ostream &out, const Scalar &s) {
    return out << s.str();
}

}  // namespace symket
