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

#ifndef SYMKET_MEASURE_H
#define SYMKET_MEASURE_H

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "symket/errors.h"
#include "symket/operator.h"
#include "symket/scalar.h"
#include "symket/state.h"

namespace symket {

template <typename Label>
struct MeasurementResult {
    Label outcome;
    double probability;
    State post_meas_state;

    /// "MeasurementResult(outcome=0, probability=1, post_meas_state=State([...]))"
    std::string str() const {
        std::ostringstream out;
        out << "MeasurementResult(outcome=" << outcome << ", probability=" << format_number(probability)
            << ", post_meas_state=" << post_meas_state.repr() << ")";
        return out.str();
    }
};

/// p_k = <psi| K_k^dagger K_k |psi>, integrated down to a number.
///
/// Throws NotNumeric when a probability stays symbolic, InvalidProbabilities when
/// some p_k < -1e-9 or the total misses 1 by more than 1e-6. Tiny negative values
/// are clamped to zero.
std::vector<double> outcome_probabilities(const State &state, std::span<const Operator> kraus_ops);

/// K|psi> / sqrt(p).
State post_measurement_state(const State &state, const Operator &kraus_op, double probability);

/// Index drawn from `probabilities` with a uniform variate in [0, 1). Zero-probability
/// entries are never chosen.
size_t sample_outcome(std::span<const double> probabilities, double uniform);

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
double uniform_unit(std::mt19937_64 &rng);

/// Measures `state` with the Kraus operators in `kraus_ops` (label -> K_label),
/// drawing the outcome from `rng`.
template <typename Label>
MeasurementResult<Label> measure(const State &state, const std::map<Label, Operator> &kraus_ops, std::mt19937_64 &rng) {
    std::vector<Label> labels;
    std::vector<Operator> ops;
    for (const auto &[label, op] : kraus_ops) {
        labels.push_back(label);
        ops.push_back(op);
    }
    std::vector<double> probs = outcome_probabilities(state, ops);
    size_t k = sample_outcome(probs, uniform_unit(rng));
    return {labels[k], probs[k], post_measurement_state(state, ops[k], probs[k])};
}

/// Seeded measurement; without a seed the generator is seeded from std::random_device.
template <typename Label>
MeasurementResult<Label> measure(
    const State &state, const std::map<Label, Operator> &kraus_ops, std::optional<std::uint64_t> seed = std::nullopt) {
    std::mt19937_64 rng(seed ? *seed : (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}());
    return measure(state, kraus_ops, rng);
}

}  // namespace symket

#endif
