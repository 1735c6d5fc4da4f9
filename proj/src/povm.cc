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

#include "symket/povm.h"

#include <cmath>
#include <future>
#include <set>
#include <stdexcept>

#include "symket/errors.h"
#include "symket/integrate.h"

namespace symket::povm {

namespace {

State fock(std::vector<FockOp> ops) {
    return to_state(BaseFockState(std::move(ops)));
}

State qubits(const std::string &digits) {
    return to_state(QuditBaseState(digits));
}

}  // namespace

void validate(const PovmSpec &spec) {
    bool supported = false;
    for (const auto &[l, r] : kSupportedProjectors) {
        supported |= spec.num_left == l && spec.num_right == r;
    }
    if (!supported) {
        throw UnsupportedProjector(
            "unsupported projector (" + std::to_string(spec.num_left) + ", " + std::to_string(spec.num_right) + ")");
    }
    if (!(spec.visibility >= 0.0 && spec.visibility <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }
}

FockStates get_fock_states() {
    Scalar phi = Scalar::function("phi", "w1");
    Scalar psi = Scalar::function("psi", "w1");
    State c = fock({FockOp("c", "w1")});
    State d = fock({FockOp("d", "w1")});
    Scalar f = 1.0 / std::sqrt(2.0);

    State cc = fock({FockOp("c", "w1"), FockOp("c", "w2")});
    State cd = fock({FockOp("c", "w1"), FockOp("d", "w2")});
    State dc = fock({FockOp("d", "w1"), FockOp("c", "w2")});
    State dd = fock({FockOp("d", "w1"), FockOp("d", "w2")});
    Scalar phipsi = Scalar::function("phi", "w1") * Scalar::function("psi", "w2");

    return {
        .vacuum = fock({}),
        .phi = f * phi * (c + d),
        .psi = f * psi * (c - d),
        .phi_psi = Scalar(1.0 / 2) * phipsi * (cc + dc - cd - dd),
    };
}

Operator construct_beam_splitter() {
    FockStates states = get_fock_states();
    std::array<State, 4> outputs{states.vacuum, states.phi, states.psi, states.phi_psi};
    std::array<const char *, 4> inputs{"00", "01", "10", "11"};
    Operator out;
    for (size_t k = 0; k < outputs.size(); k++) {
        State s = replace_var(replace_var(outputs[k], "w1", "b1"), "w2", "b2");
        out += outer_product(s, qubits(inputs[k]));
    }
    return out.simplify();
}

Operator construct_projector(int num_left, int num_right) {
    State vac = fock({});
    FockOp c1("c", "p1");
    FockOp c2("c", "p2");
    FockOp d1("d", "p1");
    FockOp d2("d", "p2");

    auto self = [](const State &s) { return outer_product(s, s); };
    if (num_left == 0 && num_right == 0) {
        return self(vac);
    }
    if (num_left == 1 && num_right == 0) {
        return self(fock({c1}));
    }
    if (num_left == 0 && num_right == 1) {
        return self(fock({d1}));
    }
    if (num_left == 1 && num_right == 1) {
        return self(tensor_product(fock({c1}), fock({d2})));
    }
    if (num_left == 2 && num_right == 0) {
        return Scalar(0.5) * self(tensor_product(fock({c1}), fock({c2})));
    }
    if (num_left == 0 && num_right == 2) {
        return Scalar(0.5) * self(tensor_product(fock({d1}), fock({d2})));
    }
    throw UnsupportedProjector(
        "unsupported projector (" + std::to_string(num_left) + ", " + std::to_string(num_right) + ")");
}

Operator symbolic_povm(int num_left, int num_right) {
    Operator u = construct_beam_splitter();
    Operator p = construct_projector(num_left, num_right);
    return simplify(u.dagger() * p * prime_variables(u));
}

RuleConverter RuleConverter::with_visibility(double visibility) {
    RuleConverter converter;
    converter.add_rule([visibility](const Scalar &s) -> std::optional<std::complex<double>> {
        auto overlap = get_if<node::InnerProduct>(s);
        if (!overlap) {
            return std::nullopt;
        }
        std::set<std::string> names{overlap->left, overlap->right};
        if (names == std::set<std::string>{"phi", "psi"}) {
            return visibility;
        }
        return std::nullopt;
    });
    return converter;
}

std::complex<double> RuleConverter::operator()(const Scalar &s) const {
    return fold(integrate(s));
}

std::complex<double> RuleConverter::fold(const Scalar &s) const {
    if (is_number(s)) {
        return to_complex(s);
    }
    if (auto sum = get_if<node::Sum>(s)) {
        std::complex<double> total = 0.0;
        for (const auto &t : sum->terms) {
            total += fold(t);
        }
        return total;
    }
    if (auto prod = get_if<node::Product>(s)) {
        std::complex<double> total = 1.0;
        for (const auto &f : prod->factors) {
            total *= fold(f);
        }
        return total;
    }
    for (const auto &rule : rules_) {
        if (auto value = rule(s)) {
            return *value;
        }
    }
    throw UnknownScalar("unknown scalar " + s.str() + " of type " + s.repr().substr(0, s.repr().find('(')));
}

PovmResult compute_povm(const PovmSpec &spec) {
    validate(spec);
    Operator m = symbolic_povm(spec.num_left, spec.num_right);
    Eigen::MatrixXcd complex_matrix =
        to_matrix(m, RuleConverter::with_visibility(spec.visibility), QuditShape{2, 2}, QuditShape{2, 2});
    if (complex_matrix.imag().cwiseAbs().maxCoeff() > 1e-9) {
        throw std::runtime_error("POVM element has a non-negligible imaginary part");
    }
    return {spec, qudit_basis({2, 2}), complex_matrix.real()};
}

std::vector<PovmResult> compute_all_povms(double visibility) {
    std::vector<std::future<PovmResult>> tasks;
    for (const auto &[l, r] : kSupportedProjectors) {
        tasks.push_back(std::async(std::launch::async, compute_povm, PovmSpec{l, r, visibility}));
    }
    std::vector<PovmResult> out;
    for (auto &t : tasks) {
        out.push_back(t.get());
    }
    return out;
}

}  // namespace symket::povm
