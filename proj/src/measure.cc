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

#include <cmath>
#include <numeric>

#include "symket/integrate.h"

namespace symket {

std::vector<double> outcome_probabilities(const State &state, std::span<const Operator> kraus_ops) {
    std::vector<double> probs;
    probs.reserve(kraus_ops.size());
    for (const auto &k : kraus_ops) {
        Operator effect = compose(k.dagger(), k.prime_variables());
        Scalar p = integrate(simplify(state.inner_product(apply(effect, state))));
        if (!is_number(p)) {
            throw NotNumeric("outcome probability did not reduce to a number: " + p.str());
        }
        double value = to_complex(p).real();
        if (value < -1e-9) {
            throw InvalidProbabilities("negative outcome probability " + format_number(value));
        }
        probs.push_back(std::max(value, 0.0));
    }
    double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::fabs(total - 1.0) > 1e-6) {
        throw InvalidProbabilities("outcome probabilities sum to " + format_number(total) + ", not 1");
    }
    return probs;
}

State post_measurement_state(const State &state, const Operator &kraus_op, double probability) {
    return apply(kraus_op, state) * Scalar(1.0 / std::sqrt(probability));
}

size_t sample_outcome(std::span<const double> probabilities, double uniform) {
    double cumulative = 0.0;
    size_t last_possible = probabilities.size();
    for (size_t k = 0; k < probabilities.size(); k++) {
        if (probabilities[k] <= 0.0) {
            continue;
        }
        last_possible = k;
        cumulative += probabilities[k];
        if (uniform < cumulative) {
            return k;
        }
    }
    // Only reachable through rounding when the total is a hair below 1.
    if (last_possible == probabilities.size()) {
        throw InvalidProbabilities("no outcome has positive probability");
    }
    return last_possible;
}

double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace symket
