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

#include "symket/measure.h"

#include "gtest/gtest.h"

#include "symket/errors.h"

using namespace symket;
using cplx = std::complex<double>;

namespace {

State ket(const std::string &digits) {
    return to_state(QuditBaseState(digits));
}

State plus() {
    return (ket("0") + ket("1")) * Scalar(1.0 / std::sqrt(2.0));
}

std::map<int, Operator> projective() {
    return {{0, outer_product(ket("0"), ket("0"))}, {1, outer_product(ket("1"), ket("1"))}};
}

}  // namespace

TEST(measure, computational_basis_states) {
    ASSERT_EQ(
        measure(ket("0"), projective(), std::optional<uint64_t>(1)).str(),
        "MeasurementResult(outcome=0, probability=1, post_meas_state=State([(BaseQubitState('0'), 1.0)]))");
    ASSERT_EQ(
        measure(ket("1"), projective(), std::optional<uint64_t>(1)).str(),
        "MeasurementResult(outcome=1, probability=1, post_meas_state=State([(BaseQubitState('1'), 1.0)]))");
}

TEST(measure, plus_state_probabilities) {
    std::vector<Operator> ops{outer_product(ket("0"), ket("0")), outer_product(ket("1"), ket("1"))};
    auto probs = outcome_probabilities(plus(), ops);
    ASSERT_EQ(format_number(probs[0]), "0.4999999999999999");
    ASSERT_NEAR(probs[1], 0.4999999999999999, 1e-12);
}

TEST(measure, seeded_runs_are_deterministic) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        auto a = measure(plus(), projective(), std::optional<uint64_t>(seed));
        auto b = measure(plus(), projective(), std::optional<uint64_t>(seed));
        ASSERT_EQ(a.str(), b.str());
    }
}

TEST(measure, empirical_frequency) {
    std::mt19937_64 rng(2024);
    std::vector<Operator> ops{outer_product(ket("0"), ket("0")), outer_product(ket("1"), ket("1"))};
    auto probs = outcome_probabilities(plus(), ops);
    int zeros = 0;
    for (int trial = 0; trial < 10000; trial++) {
        zeros += sample_outcome(probs, uniform_unit(rng)) == 0;
    }
    ASSERT_GE(zeros, 4700);
    ASSERT_LE(zeros, 5300);
}

TEST(measure, post_state_is_a_fixed_point) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        auto first = measure(plus(), projective(), std::optional<uint64_t>(seed));
        auto second = measure(first.post_meas_state, projective(), std::optional<uint64_t>(seed + 100));
        ASSERT_EQ(second.outcome, first.outcome);
        ASSERT_NEAR(second.probability, 1.0, 1e-9);
        ASSERT_NEAR(to_complex(inner_product(first.post_meas_state, first.post_meas_state)).real(), 1.0, 1e-9);
    }
}

TEST(measure, string_labels_and_complex_amplitudes) {
    State s = ket("0") * Scalar(cplx(0.6, 0)) + ket("1") * Scalar(cplx(0, 0.8));
    std::map<std::string, Operator> ops{
        {"down", outer_product(ket("1"), ket("1"))}, {"up", outer_product(ket("0"), ket("0"))}};
    std::mt19937_64 rng(9);
    auto r = measure(s, ops, rng);
    ASSERT_TRUE(r.outcome == "up" || r.outcome == "down");
    ASSERT_NEAR(r.probability, r.outcome == "up" ? 0.36 : 0.64, 1e-12);
}

TEST(measure, fock_state_through_a_kraus_map) {
    // Kraus operators from a one-photon wave packet onto qubit flags.
    State photon = to_state(BaseFockState({FockOp("c", "w")})) * Scalar::function("phi", "w");
    Operator k0 = outer_product(ket("0"), to_state(BaseFockState({FockOp("c", "x")})) * Scalar::function("phi", "x"));
    auto probs = outcome_probabilities(photon, std::vector<Operator>{k0});
    ASSERT_NEAR(probs[0], 1.0, 1e-12);
}

TEST(measure, invalid_inputs) {
    std::map<int, Operator> incomplete{{0, outer_product(ket("0"), ket("0"))}};
    ASSERT_THROW(measure(plus(), incomplete, std::optional<uint64_t>(0)), InvalidProbabilities);
    Scalar a = Scalar::variable("a");
    State symbolic = ket("0") * a;
    ASSERT_THROW(measure(symbolic, projective(), std::optional<uint64_t>(0)), NotNumeric);
    std::vector<double> nothing{0.0, 0.0};
    ASSERT_THROW(sample_outcome(nothing, 0.5), InvalidProbabilities);
}

TEST(measure, zero_probability_outcomes_are_never_sampled) {
    std::vector<double> probs{0.0, 1.0, 0.0};
    for (double u : {0.0, 0.3, 0.999999, 1.0 - 1e-16}) {
        ASSERT_EQ(sample_outcome(probs, u), 1u);
    }
    std::vector<double> short_total{0.5, 0.5 - 1e-12, 0.0};
    ASSERT_EQ(sample_outcome(short_total, 1.0 - 1e-16), 1u);
}

TEST(measure, uniform_unit_range) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 1000; k++) {
        double u = uniform_unit(rng);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}
