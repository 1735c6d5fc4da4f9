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

#include "gtest/gtest.h"

#include "symket/errors.h"

using namespace symket;

namespace {

Scalar fn(const char *name, const char *arg, bool conj = false) {
    return Scalar::function(name, arg, conj);
}

Scalar delta(const char *x, const char *y) {
    return Scalar::delta(x, y);
}

}  // namespace

TEST(integrate, delta_and_pair_give_overlap) {
    Scalar s = fn("phi", "w", true) * fn("psi", "w'") * delta("w", "w'");
    Scalar r = integrate(s);
    ASSERT_EQ(r.str(), "<phi|psi>");
    ASSERT_EQ(r.repr(), "InnerProductFunction('phi', 'psi')");
}

TEST(integrate, normalized_packets) {
    ASSERT_TRUE(integrate(fn("phi", "w", true) * fn("phi", "w")).is_one());
    // The same pair arrives as |phi(w)|^2 once simplified.
    ASSERT_TRUE(integrate(simplify(fn("phi", "w", true) * fn("phi", "w"))).is_one());
}

TEST(integrate, numbers_pass_through) {
    ASSERT_EQ(integrate(Scalar(0.5)).str(), "0.5");
    ASSERT_EQ(integrate(Scalar(0.5), {"x"}).str(), "0.5");
}

TEST(integrate, amplitude_symbols_are_constants) {
    Scalar a = Scalar::variable("a");
    Scalar s = a * fn("phi", "w", true) * fn("psi", "w");
    ASSERT_EQ(integrate(s).str(), "a*<phi|psi>");
}

TEST(integrate, chained_deltas) {
    // phi*(b1) D[b1-p1] D[p1-q] psi(q)
    Scalar s = fn("phi", "b1", true) * delta("b1", "p1") * delta("p1", "q") * fn("psi", "q");
    ASSERT_EQ(integrate(s).str(), "<phi|psi>");
}

TEST(integrate, conjugated_side_names_the_bra) {
    Scalar s = fn("psi", "x") * fn("phi", "x", true);
    ASSERT_EQ(integrate(s).str(), "<phi|psi>");
    ASSERT_EQ(integrate(conjugate(s)).str(), "<psi|phi>");
}

TEST(integrate, partial_variable_set_keeps_other_deltas) {
    Scalar s = fn("phi", "x", true) * delta("x", "y") * delta("u", "v");
    ASSERT_EQ(integrate(s, {"x"}).str(), "phi*(y)*D[u-v]");
}

TEST(integrate, divergent_cases) {
    ASSERT_THROW(integrate(fn("phi", "x")), DivergentIntegral);
    ASSERT_THROW(integrate(fn("phi", "x") * fn("psi", "x")), DivergentIntegral);
    ASSERT_THROW(integrate(fn("phi", "x", true) * fn("psi", "x") * fn("phi", "x")), DivergentIntegral);
    // delta squared
    Scalar s = fn("phi", "x", true) * delta("x", "y") * delta("x", "y") * fn("psi", "y");
    ASSERT_THROW(integrate(s), DivergentIntegral);
    ASSERT_THROW(integrate(delta("x", "x")), DivergentIntegral);
    // Pair on y but a lone delta on (u, v) with both integrated leaves u free.
    ASSERT_THROW(integrate(delta("u", "v")), DivergentIntegral);
}

TEST(integrate, order_independence) {
    std::vector<Scalar> corpus{
        fn("phi", "x", true) * delta("x", "y") * fn("psi", "y"),
        fn("phi", "x", true) * fn("psi", "y", true) * delta("x", "u") * delta("y", "v") * fn("phi", "u") *
            fn("psi", "v"),
        fn("phi", "x", true) * fn("psi", "y", true) * delta("x", "v") * delta("y", "u") * fn("phi", "u") *
            fn("psi", "v"),
        Scalar(0.5) * fn("psi", "x", true) * fn("phi", "x") + Scalar(2.0) * fn("phi", "y", true) * fn("psi", "y"),
    };
    for (const auto &s : corpus) {
        std::set<std::string> vars = free_variables(s);
        std::string together = integrate(s, vars).key();
        std::vector<std::string> order(vars.begin(), vars.end());
        do {
            Scalar step = s;
            for (const auto &v : order) {
                step = integrate(step, {v});
            }
            ASSERT_EQ(step.key(), together) << s.str();
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST(integrate, linearity) {
    Scalar s1 = fn("phi", "x", true) * delta("x", "y") * fn("psi", "y");
    Scalar s2 = fn("psi", "u", true) * fn("phi", "u");
    for (double alpha : {0.5, -2.0, 3.25}) {
        for (double beta : {1.0, -0.75}) {
            Scalar lhs = integrate(Scalar(alpha) * s1 + Scalar(beta) * s2);
            Scalar rhs = simplify(Scalar(alpha) * integrate(s1) + Scalar(beta) * integrate(s2));
            ASSERT_EQ(lhs.key(), rhs.key());
        }
    }
}

TEST(integrate, delta_symmetry) {
    Scalar forward = fn("phi", "x", true) * delta("x", "y") * fn("psi", "y");
    Scalar backward = fn("phi", "x", true) * delta("y", "x") * fn("psi", "y");
    ASSERT_EQ(integrate(forward).key(), integrate(backward).key());
}

TEST(integrate, idempotent_on_variable_free_input) {
    Scalar s = Scalar(0.25) * Scalar::inner_product_function("phi", "psi") + Scalar(0.5);
    Scalar once = integrate(s);
    ASSERT_EQ(once.key(), simplify(s).key());
    ASSERT_EQ(integrate(once).key(), once.key());
}

TEST(integrate, sums_integrate_termwise) {
    Scalar s = Scalar(0.5) * fn("phi", "x", true) * fn("psi", "x") + Scalar(-0.5) * fn("phi", "y", true) * fn("psi", "y");
    ASSERT_TRUE(integrate(s).is_zero());
}
