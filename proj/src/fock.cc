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

#include "symket/fock.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symket {

namespace {

std::string render(std::span<const FockOp> ops, bool creation) {
    std::string out;
    for (size_t k = 0; k < ops.size();) {
        size_t run = k;
        while (run < ops.size() && ops[run] == ops[k]) {
            run++;
        }
        out += ops[k].mode() + (creation ? "+(" : "(") + ops[k].variable() + ")^" + std::to_string(run - k);
        k = run;
    }
    return out;
}

std::map<std::string, std::vector<std::string>> variables_by_mode(const BaseFockState &s) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto &op : s.ops()) {
        out[op.mode()].push_back(op.variable());
    }
    return out;
}

// Permanent of [D[left_i - right_j]] as a list of delta-product terms.
std::vector<Scalar> pairings(const std::vector<std::string> &left, const std::vector<std::string> &right) {
    std::vector<size_t> perm(right.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Scalar> terms;
    do {
        std::vector<Scalar> deltas;
        for (size_t i = 0; i < left.size(); i++) {
            deltas.push_back(Scalar::delta(left[i], right[perm[i]]));
        }
        terms.push_back(deltas.size() == 1 ? deltas.front() : Scalar::product(std::move(deltas)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return terms;
}

}  // namespace

FockOp::FockOp(std::string mode, std::string variable) : mode_(std::move(mode)), variable_(std::move(variable)) {
    if (mode_.empty() || variable_.empty()) {
        throw std::invalid_argument("fock operator mode and variable must be non-empty");
    }
}

std::string FockOp::str() const {
    return mode_ + "+(" + variable_ + ")";
}

BaseFockState::BaseFockState(std::vector<FockOp> ops) : ops_(std::move(ops)) {
    std::sort(ops_.begin(), ops_.end());
}

std::string BaseFockState::ket() const {
    return render(ops_, true) + "|0>";
}

std::string BaseFockState::bra() const {
    return "<0|" + render(ops_, false);
}

std::string BaseFockState::repr() const {
    std::string out = "BaseFockState([";
    for (size_t k = 0; k < ops_.size(); k++) {
        out += (k ? ", " : "") + ("FockOp('" + ops_[k].mode() + "', '" + ops_[k].variable() + "')");
    }
    return out + "])";
}

BaseFockState BaseFockState::replace_var(const std::string &old_name, const std::string &new_name) const {
    std::vector<FockOp> ops;
    for (const auto &op : ops_) {
        ops.emplace_back(op.mode(), op.variable() == old_name ? new_name : op.variable());
    }
    return BaseFockState(std::move(ops));
}

BaseFockState BaseFockState::prime_variables() const {
    std::vector<FockOp> ops;
    for (const auto &op : ops_) {
        ops.emplace_back(op.mode(), op.variable() + "'");
    }
    return BaseFockState(std::move(ops));
}

std::set<std::string> BaseFockState::variables() const {
    std::set<std::string> out;
    for (const auto &op : ops_) {
        out.insert(op.variable());
    }
    return out;
}

Scalar fock_inner_product(const BaseFockState &left, const BaseFockState &right) {
    if (photon_count(left) != photon_count(right)) {
        return Scalar();
    }
    auto left_modes = variables_by_mode(left);
    auto right_modes = variables_by_mode(right);

    std::vector<Scalar> acc{Scalar(1.0)};
    for (const auto &[mode, left_vars] : left_modes) {
        std::vector<Scalar> next;
        for (const auto &pairing : pairings(left_vars, right_modes.at(mode))) {
            for (const auto &a : acc) {
                next.push_back(a.is_one() ? pairing : multiply(a, pairing));
            }
        }
        acc = std::move(next);
    }
    if (acc.size() == 1) {
        return simplify(acc.front());
    }
    return simplify(Scalar::sum(std::move(acc)));
}

BaseFockState fock_tensor_product(const BaseFockState &left, const BaseFockState &right) {
    std::vector<FockOp> ops(left.ops().begin(), left.ops().end());
    ops.insert(ops.end(), right.ops().begin(), right.ops().end());
    return BaseFockState(std::move(ops));
}

std::map<std::string, int> photon_count(const BaseFockState &state) {
    std::map<std::string, int> out;
    for (const auto &op : state.ops()) {
        out[op.mode()]++;
    }
    return out;
}

}  // namespace symket
