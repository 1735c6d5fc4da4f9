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

#include "gtest/gtest.h"

#include "symket/errors.h"
#include "symket/scalar_json.h"
#include "test_support.h"

using namespace symket;
using symket::testing::close;
using symket::testing::cplx;

namespace {

const Scalar a = Scalar::variable("a");
const Scalar b = Scalar::variable("b");
const Scalar c = Scalar::variable("c");
const Scalar d = Scalar::variable("d");

constexpr int kCases = 250;

}  // namespace

TEST(scalar, renders_variables_and_conjugates) {
    ASSERT_EQ(a.str(), "a");
    ASSERT_EQ(conjugate(a).str(), "(a*)");
    ASSERT_EQ(Scalar::function("phi", "w").str(), "phi(w)");
    ASSERT_EQ(conjugate(Scalar::function("phi", "w")).str(), "phi*(w)");
    ASSERT_EQ(Scalar::inner_product_function("phi", "psi").str(), "<phi|psi>");
    ASSERT_EQ(Scalar::delta("w", "v").str(), "D[w-v]");
}

TEST(scalar, conjugate_numbers_and_overlaps) {
    auto n = get_if<node::Number>(conjugate(Scalar(cplx(2, 3))));
    ASSERT_NE(n, nullptr);
    ASSERT_EQ(n->value, cplx(2, -3));
    ASSERT_EQ(conjugate(Scalar::inner_product_function("phi", "psi")).str(), "<psi|phi>");
    ASSERT_EQ(conjugate(Scalar::delta("w", "v")).str(), "D[w-v]");
    ASSERT_EQ(conjugate(Scalar::abs_squared(a)).str(), "|a|^2");
}

TEST(scalar, multiply_recognizes_abs_squared) {
    Scalar expr = a * conjugate(a);
    ASSERT_EQ(expr.kind(), ScalarKind::AbsSquared);
    ASSERT_EQ(expr.str(), "|a|^2");
    ASSERT_EQ((conjugate(b) * b).str(), "|b|^2");
    // Only flagged atoms with matching names pair up.
    ASSERT_EQ((a * conjugate(b)).str(), "a*(b*)");
    ASSERT_EQ((a * a).str(), "a*a");
}

TEST(scalar, products_of_sums_render_unexpanded) {
    ASSERT_EQ(((a + b) * (c + d)).str(), "(a + b)*(c + d)");
}

TEST(scalar, expand_then_simplify) {
    Scalar expanded = expand((a + b) * (c + d));
    for (const auto &t : expanded.children()) {
        ASSERT_NE(t.kind(), ScalarKind::Sum);
    }
    ASSERT_EQ(simplify(expanded).str(), "(a*c + a*d + b*c + b*d)");
    ASSERT_EQ(expand(a).str(), "a");
}

TEST(scalar, expand_matches_brute_force_enumeration) {
    Scalar expr = (a + b) * (c + d) * (a + b);
    std::vector<Scalar> terms;
    for (const auto &x : {a, b}) {
        for (const auto &y : {c, d}) {
            for (const auto &z : {a, b}) {
                terms.push_back(Scalar::product({x, y, z}));
            }
        }
    }
    ASSERT_EQ(terms.size(), 8u);
    Scalar oracle = Scalar::sum(terms);
    Scalar expanded = expand(expr);
    ASSERT_EQ(expanded.children().size(), 8u);
    ASSERT_EQ(simplify(expanded).key(), simplify(oracle).key());
    // a*c*b and b*c*a merge, so six distinct monomials remain.
    ASSERT_EQ(simplify(expanded).children().size(), 6u);
    for (int seed = 0; seed < 20; seed++) {
        auto val = symket::testing::random_valuation(seed);
        ASSERT_TRUE(close(evaluate(expanded, val), evaluate(oracle, val)));
    }
}

TEST(scalar, expand_abs_squared_of_sum) {
    Scalar expr = Scalar::abs_squared(a + b);
    Scalar expanded = simplify(expand(expr));
    ASSERT_EQ(expanded.str(), "(|a|^2 + |b|^2 + (a*)*b + (b*)*a)");
}

TEST(scalar, simplify_folds_numbers) {
    auto n = get_if<node::Number>(simplify(Scalar(2.0) * Scalar(3.0)));
    ASSERT_NE(n, nullptr);
    ASSERT_EQ(n->value, cplx(6.0));
    ASSERT_EQ(simplify(a * Scalar(1.0)).str(), "a");
    ASSERT_EQ(simplify(a * Scalar(0.0) + b).str(), "b");
    ASSERT_TRUE(simplify(a * Scalar(1e-13)).is_zero());
    ASSERT_EQ(simplify(Scalar::abs_squared(a) + Scalar::abs_squared(b)).str(), "(|a|^2 + |b|^2)");
}

TEST(scalar, simplify_merges_like_terms) {
    Scalar overlap = Scalar::inner_product_function("phi", "psi");
    ASSERT_TRUE(simplify(Scalar(0.5) * overlap + Scalar(-0.5) * overlap).is_zero());
    ASSERT_EQ(simplify(a + a).str(), "2*a");
    // Deltas are symmetric.
    ASSERT_TRUE(simplify(Scalar::delta("w", "v") - Scalar::delta("v", "w")).is_zero());
    ASSERT_TRUE(structurally_equal(Scalar::delta("w", "v"), Scalar::delta("v", "w")));
}

TEST(scalar, simplify_normalizes_self_overlap) {
    ASSERT_TRUE(simplify(Scalar::inner_product_function("phi", "phi")).is_one());
    ASSERT_EQ(simplify(Scalar::abs_squared(Scalar(cplx(3, 4)))).str(), "25");
}

TEST(scalar, simplify_postconditions) {
    symket::testing::ScalarGenerator gen(11);
    std::function<void(const Scalar &, bool)> check = [&](const Scalar &s, bool inside_product) {
        if (s.kind() == ScalarKind::Sum || s.kind() == ScalarKind::Product) {
            ASSERT_GE(s.children().size(), 2u) << s.str();
        }
        for (const auto &child : s.children()) {
            if (s.kind() == ScalarKind::Sum) {
                ASSERT_NE(child.kind(), ScalarKind::Sum) << s.str();
            }
            if (s.kind() == ScalarKind::Product) {
                ASSERT_NE(child.kind(), ScalarKind::Product) << s.str();
                ASSERT_FALSE(child.is_zero()) << s.str();
                ASSERT_FALSE(child.is_one()) << s.str();
            }
            check(child, s.kind() == ScalarKind::Product);
        }
        (void)inside_product;
    };
    for (int k = 0; k < kCases; k++) {
        check(simplify(gen.tree(5)), false);
    }
}

TEST(scalar, replace_var) {
    ASSERT_EQ(replace_var(Scalar::delta("w1", "v"), "w1", "b1").str(), "D[b1-v]");
    ASSERT_EQ(prime_variables(Scalar::function("phi", "w")).str(), "phi(w')");
    ASSERT_EQ(prime_variables(prime_variables(Scalar::function("phi", "w"))).str(), "phi(w'')");
    Scalar s = (a + b) * Scalar::function("phi", "w");
    ASSERT_EQ(replace_var(s, "x", "y").str(), s.str());
    ASSERT_EQ(replace_var(s, "a", "z").str(), "(z + b)*phi(w)");
}

TEST(scalar, is_number_and_to_complex) {
    ASSERT_TRUE(is_number(Scalar(0.5)));
    ASSERT_EQ(to_complex(Scalar(0.5)), cplx(0.5));
    ASSERT_FALSE(is_number(a));
    ASSERT_THROW(to_complex(a), NotNumeric);
    Scalar abs = Scalar::abs_squared(Scalar(cplx(3, 4)));
    ASSERT_TRUE(is_number(abs));
    ASSERT_EQ(to_complex(abs), cplx(25.0));
    ASSERT_TRUE(is_number(Scalar::sum({Scalar(1.0), Scalar::product({Scalar(2.0), Scalar(3.0)})})));
    ASSERT_EQ(to_complex(Scalar::sum({Scalar(1.0), Scalar::product({Scalar(2.0), Scalar(3.0)})})), cplx(7.0));
}

TEST(scalar, division_needs_numeric_divisor) {
    ASSERT_EQ((Scalar(1.0) / Scalar(3.0)).str(), "0.3333333333333333");
    ASSERT_EQ(simplify(a / Scalar(2.0)).str(), "0.5*a");
    ASSERT_THROW(a / b, NotNumeric);
}

TEST(scalar, free_variables) {
    Scalar s = conjugate(Scalar::function("phi", "w")) * Scalar::function("psi", "w'") * Scalar::delta("w", "w'");
    ASSERT_EQ(free_variables(s), (std::set<std::string>{"w", "w'"}));
    ASSERT_TRUE(free_variables(Scalar(1.0)).empty());
    ASSERT_EQ(free_variables((a + b) * (c + d)), (std::set<std::string>{"a", "b", "c", "d"}));
}

TEST(scalar, empty_sums_and_products_are_rejected) {
    ASSERT_THROW(Scalar::sum({}), std::invalid_argument);
    ASSERT_THROW(Scalar::product({}), std::invalid_argument);
    ASSERT_THROW(Scalar(std::nan("")), std::invalid_argument);
    ASSERT_THROW(Scalar(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(scalar, number_formatting) {
    ASSERT_EQ(format_number(1.0), "1");
    ASSERT_EQ(format_number(-0.0), "0");
    ASSERT_EQ(format_number(1.0 / std::sqrt(2.0)), "0.7071067811865475");
    ASSERT_EQ(format_number(cplx(2, -3)), "(2-3j)");
    ASSERT_EQ(format_number(cplx(0, 1)), "1j");
    ASSERT_EQ(format_float(1.0), "1.0");
    ASSERT_EQ(format_float(0.25), "0.25");
}

TEST(scalar, repr_and_json) {
    ASSERT_EQ(Scalar::inner_product_function("phi", "psi").repr(), "InnerProductFunction('phi', 'psi')");
    auto j = to_json(a + Scalar::delta("w", "v"));
    ASSERT_EQ(j["kind"], "SumOfScalars");
    ASSERT_EQ(j["args"][0]["kind"], "Variable");
    ASSERT_EQ(j["args"][1]["kind"], "DeltaFunction");
    ASSERT_EQ(j["args"][1]["args"][0], "w");
}

TEST(scalar_properties, conjugate_is_an_involution) {
    symket::testing::ScalarGenerator gen(1);
    for (int k = 0; k < kCases; k++) {
        Scalar s = gen.tree(5);
        ASSERT_EQ(simplify(conjugate(conjugate(s))).key(), simplify(s).key()) << s.str();
    }
}

TEST(scalar_properties, simplify_is_idempotent) {
    symket::testing::ScalarGenerator gen(2);
    for (int k = 0; k < kCases; k++) {
        Scalar s = gen.tree(5);
        Scalar once = simplify(s);
        Scalar twice = simplify(once);
        ASSERT_EQ(once.key(), twice.key()) << s.str();
        ASSERT_EQ(once.str(), twice.str()) << s.str();
    }
}

TEST(scalar_properties, simplify_and_expand_preserve_value) {
    symket::testing::ScalarGenerator gen(3);
    for (int k = 0; k < kCases; k++) {
        Scalar s = gen.tree(5);
        auto val = symket::testing::random_valuation(1000 + k);
        cplx expected = evaluate(s, val);
        ASSERT_TRUE(close(evaluate(expand(s), val), expected, 1e-12)) << s.str();
        ASSERT_TRUE(close(evaluate(simplify(s), val), expected, 1e-12)) << s.str();
    }
}

TEST(scalar_properties, times_own_conjugate_is_nonnegative) {
    symket::testing::ScalarGenerator gen(4);
    for (int k = 0; k < kCases; k++) {
        Scalar s = gen.tree(5);
        auto val = symket::testing::random_valuation(2000 + k);
        cplx v = evaluate(multiply(s, conjugate(s)), val);
        ASSERT_LT(std::fabs(v.imag()), 1e-12 * std::max(1.0, std::abs(v))) << s.str();
        ASSERT_GE(v.real(), -1e-12) << s.str();
    }
}
