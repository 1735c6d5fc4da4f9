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

#ifndef SYMKET_FOCK_H
#define SYMKET_FOCK_H

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "symket/scalar.h"

namespace symket {

/// Bosonic creation operator a^dagger(w) in mode `mode` with continuous argument `variable`.
class FockOp {
   public:
    FockOp(std::string mode, std::string variable);

    const std::string &mode() const {
        return mode_;
    }
    const std::string &variable() const {
        return variable_;
    }
    /// "a+(w)"
    std::string str() const;

    auto operator<=>(const FockOp &) const = default;

   private:
    std::string mode_;
    std::string variable_;
};

/// Product of creation operators acting on the vacuum. The operators commute, so
/// they are kept sorted by (mode, variable); the empty product is the vacuum.
class BaseFockState {
   public:
    BaseFockState() = default;
    explicit BaseFockState(std::vector<FockOp> ops);

    std::span<const FockOp> ops() const {
        return ops_;
    }
    bool is_vacuum() const {
        return ops_.empty();
    }

    /// "a+(w)^1|0>", with repeated (mode, variable) pairs grouped into one exponent.
    std::string ket() const;
    /// "<0|a(w)^1"
    std::string bra() const;
    std::string repr() const;

    BaseFockState replace_var(const std::string &old_name, const std::string &new_name) const;
    BaseFockState prime_variables() const;
    std::set<std::string> variables() const;

    bool operator==(const BaseFockState &) const = default;

   private:
    std::vector<FockOp> ops_;
};

/// <0| prod a(w_i) prod a^dagger(v_j) |0>.
///
/// Zero unless every mode has the same photon count on both sides. Otherwise the
/// product over modes of the permanent of D[w_i - v_j], summed over all pairings.
/// Enumerates n! pairings per mode with n photons, which is fine for the handful
/// of photons per mode used here.
Scalar fock_inner_product(const BaseFockState &left, const BaseFockState &right);

BaseFockState fock_tensor_product(const BaseFockState &left, const BaseFockState &right);

std::map<std::string, int> photon_count(const BaseFockState &state);

}  // namespace symket

#endif
