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

#include "symket/integrate.h"

#include <algorithm>
#include <optional>

#include "symket/errors.h"

namespace symket {

namespace {

// One product term of an expanded expression, with |f(x)|^2 unfolded into f^*(x) f(x).
struct Term {
    std::vector<Scalar> factors;

    bool depends_on(const Scalar &f, const std::string &var) const {
        if (auto fn = get_if<node::Function>(f)) {
            return fn->argument == var;
        }
        if (auto d = get_if<node::Delta>(f)) {
            return d->first == var || d->second == var;
        }
        return false;
    }

    bool depends_on(const std::string &var) const {
        return std::any_of(factors.begin(), factors.end(), [&](const Scalar &f) { return depends_on(f, var); });
    }

    void substitute(const std::string &from, const std::string &to) {
        auto sub = [&](const std::string &v) { return v == from ? to : v; };
        for (auto &f : factors) {
            if (auto fn = get_if<node::Function>(f)) {
                f = Scalar::function(fn->name, sub(fn->argument), fn->conjugated);
            } else if (auto d = get_if<node::Delta>(f)) {
                f = Scalar::delta(sub(d->first), sub(d->second));
            }
        }
    }

    void check_collapsed_deltas() const {
        for (const auto &f : factors) {
            auto d = get_if<node::Delta>(f);
            if (d && d->first == d->second) {
                throw DivergentIntegral("delta evaluated at zero: " + f.str());
            }
        }
    }
};

void unfold(const Scalar &f, std::vector<Scalar> &out) {
    if (auto prod = get_if<node::Product>(f)) {
        for (const auto &g : prod->factors) {
            unfold(g, out);
        }
        return;
    }
    if (auto abs = get_if<node::AbsSquared>(f)) {
        if (abs->inner.kind() == ScalarKind::Function || abs->inner.kind() == ScalarKind::Delta) {
            out.push_back(conjugate(abs->inner));
            out.push_back(abs->inner);
            return;
        }
    }
    out.push_back(f);
}

// Removes the first delta that touches an integration variable. Returns false when none does.
bool eliminate_one_delta(Term &term, std::set<std::string> &pending) {
    for (size_t k = 0; k < term.factors.size(); k++) {
        auto d = get_if<node::Delta>(term.factors[k]);
        if (!d) {
            continue;
        }
        bool first_free = pending.count(d->first) > 0;
        bool second_free = pending.count(d->second) > 0;
        if (!first_free && !second_free) {
            continue;
        }
        // Integrate out one argument; when both are integration variables the
        // lexicographically larger one goes and the other stays pending.
        std::string gone = d->first;
        std::string kept = d->second;
        if (!first_free || (second_free && d->second > d->first)) {
            std::swap(gone, kept);
        }
        term.factors.erase(term.factors.begin() + static_cast<std::ptrdiff_t>(k));
        term.substitute(gone, kept);
        pending.erase(gone);
        term.check_collapsed_deltas();
        return true;
    }
    return false;
}

void integrate_pair(Term &term, const std::string &var) {
    std::vector<size_t> touching;
    for (size_t k = 0; k < term.factors.size(); k++) {
        if (term.depends_on(term.factors[k], var)) {
            touching.push_back(k);
        }
    }
    if (touching.empty()) {
        throw DivergentIntegral("integrand is constant in " + var);
    }
    if (touching.size() == 2) {
        auto a = get_if<node::Function>(term.factors[touching[0]]);
        auto b = get_if<node::Function>(term.factors[touching[1]]);
        if (a && b && a->conjugated != b->conjugated) {
            const auto &bra = a->conjugated ? *a : *b;
            const auto &ket = a->conjugated ? *b : *a;
            Scalar overlap = Scalar::inner_product_function(bra.name, ket.name);
            term.factors.erase(term.factors.begin() + static_cast<std::ptrdiff_t>(touching[1]));
            term.factors[touching[0]] = overlap;
            return;
        }
    }
    std::string factors;
    for (size_t k : touching) {
        factors += (factors.empty() ? "" : "*") + term.factors[k].str();
    }
    throw DivergentIntegral("cannot integrate over " + var + ": " + factors);
}

Scalar integrate_term(const Scalar &t, const std::set<std::string> &variables) {
    Term term;
    unfold(t, term.factors);
    term.check_collapsed_deltas();

    std::set<std::string> pending;
    for (const auto &v : variables) {
        if (term.depends_on(v)) {
            pending.insert(v);
        }
    }
    while (eliminate_one_delta(term, pending)) {
    }
    for (const auto &v : pending) {
        integrate_pair(term, v);
    }

    if (term.factors.empty()) {
        return Scalar(1.0);
    }
    if (term.factors.size() == 1) {
        return term.factors.front();
    }
    return Scalar::product(std::move(term.factors));
}

}  // namespace

Scalar integrate(const Scalar &s) {
    return integrate(s, free_variables(s));
}

Scalar integrate(const Scalar &s, const std::set<std::string> &variables) {
    Scalar expanded = simplify(expand(simplify(s)));
    std::vector<Scalar> results;
    if (auto sum = get_if<node::Sum>(expanded)) {
        for (const auto &t : sum->terms) {
            results.push_back(integrate_term(t, variables));
        }
    } else {
        results.push_back(integrate_term(expanded, variables));
    }
    if (results.size() == 1) {
        return simplify(results.front());
    }
    return simplify(Scalar::sum(std::move(results)));
}

}  // namespace symket
