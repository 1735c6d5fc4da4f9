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

#ifndef SYMKET_POVM_H
#define SYMKET_POVM_H

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symket/operator.h"
#include "symket/scalar.h"
#include "symket/state.h"

namespace symket::povm {

/// Photon counts at the two detectors (c and d) plus the wave-packet overlap.
struct PovmSpec {
    int num_left = 0;
    int num_right = 0;
    double visibility = 1.0;
};

/// The six supported (num_left, num_right) pairs.
inline constexpr std::array<std::array<int, 2>, 6> kSupportedProjectors{{
    {0, 0},
    {1, 0},
    {0, 1},
    {1, 1},
    {2, 0},
    {0, 2},
}};

/// Throws UnsupportedProjector for unknown photon-count pairs and
/// std::invalid_argument for visibility outside [0, 1].
void validate(const PovmSpec &spec);

struct FockStates {
    State vacuum;
    /// One photon with wave packet phi, split over both outputs.
    State phi;
    /// One photon with wave packet psi, split with a relative minus sign.
    State psi;
    /// One phi photon and one psi photon.
    State phi_psi;
};

/// Output states of the beam splitter for the four two-qubit inputs, over
/// variables w1 and w2.
FockStates get_fock_states();

/// Isometry from the two-qubit basis {00, 01, 10, 11} onto the four output
/// states, with w1, w2 renamed to b1, b2.
Operator construct_beam_splitter();

/// Photon-number projector onto `num_left` photons in mode c and `num_right` in
/// mode d, with integration variables p1, p2. Two photons in the same mode carry
/// the 1/2 from the symmetric two-photon resolution of the identity.
Operator construct_projector(int num_left, int num_right);

/// U^dagger P U' before numeric conversion, simplified.
Operator symbolic_povm(int num_left, int num_right);

/// Recursive scalar fold with an extensible rule table.
///
/// Each scalar is integrated first. Numbers pass through, sums and products
/// recurse, and the first matching rule handles everything else. With no match
/// the conversion throws UnknownScalar.
class RuleConverter {
   public:
    using Rule = std::function<std::optional<std::complex<double>>(const Scalar &)>;

    RuleConverter() = default;

    /// Maps <phi|psi> and <psi|phi> to `visibility`.
    static RuleConverter with_visibility(double visibility);

    void add_rule(Rule rule) {
        rules_.push_back(std::move(rule));
    }
    std::complex<double> operator()(const Scalar &s) const;

   private:
    std::complex<double> fold(const Scalar &s) const;

    std::vector<Rule> rules_;
};

struct PovmResult {
    PovmSpec spec;
    std::vector<std::string> basis;
    Eigen::Matrix4d matrix;
};

/// Effective POVM element on the two-qubit input space.
///
/// Throws UnknownScalar or DivergentIntegral when conversion fails and
/// std::runtime_error if an entry keeps an imaginary part above 1e-9.
PovmResult compute_povm(const PovmSpec &spec);

/// All six elements for one visibility, in `kSupportedProjectors` order,
/// computed concurrently.
std::vector<PovmResult> compute_all_povms(double visibility);

}  // namespace symket::povm

#endif
